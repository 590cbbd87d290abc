from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .commands.algebra import cmd_multiply, cmd_straighten, cmd_verify_order
from .commands.basis import cmd_gb, cmd_macaulay, cmd_member, cmd_reduce, cmd_universal_check, cmd_verify_gb
from .commands.ltterms import cmd_lam, cmd_lcm
from .commands.series import cmd_dim, cmd_hilbert
from .commands.syzygies import cmd_syzygy
from .config import ConfigError
from .context import Session, setup_logger
from .errors import InternalConsistencyError, NonTerminatingRewrite, PaslError

COMMANDS = {
    "straighten": cmd_straighten,
    "multiply": cmd_multiply,
    "reduce": cmd_reduce,
    "gb": cmd_gb,
    "member": cmd_member,
    "verify-gb": cmd_verify_gb,
    "universal-check": cmd_universal_check,
    "lcm": cmd_lcm,
    "lam": cmd_lam,
    "syzygy": cmd_syzygy,
    "hilbert": cmd_hilbert,
    "dim": cmd_dim,
    "macaulay": cmd_macaulay,
    "verify-order": cmd_verify_order,
}

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _global_flags(parser: argparse.ArgumentParser, default) -> None:
    parser.add_argument("--format", choices=("human", "json"), default=default("human"), help="Output format")
    parser.add_argument("--verbose", action="store_true", default=default(False), help="Debug logging")
    parser.add_argument("--log-file", default=default(""), help="Also write the log to this file")
    parser.add_argument("--output", default=default(""), help="Write the JSON result document to this file")
    parser.add_argument("--allow-large", action="store_true", default=default(False),
                        help="Lift the matrix size cap for bideterminant algebras")


def _inputs(p: argparse.ArgumentParser, alt: bool = True, ideal: bool = True, required: bool = True) -> None:
    p.add_argument("--algebra", required=required, help="bidet:NxM, poly:x,y,..., example:NAME or a JSON file")
    p.add_argument("--order", default=None, help="default, bitableau or an order JSON file")
    if alt:
        p.add_argument("--alt", default="gen", help="gen, disc or a custom algebra-of-leading-terms JSON file")
    if ideal:
        p.add_argument("--ideal", required=required, help="minors:r, minors:r+, a JSON file or ';'-separated literals")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pasl", description="Gröbner bases, syzygies and Hilbert series over pseudo-ASLs"
    )
    _global_flags(parser, lambda v: v)
    shared = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a flag given before the command from being reset by the subparser
    _global_flags(shared, lambda v: argparse.SUPPRESS)
    subparsers = parser.add_subparsers(dest="command", help="Command to run")

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(name, help=help_text, parents=[shared])

    p = add("straighten", "Straighten an element into standard monomials")
    _inputs(p, alt=False, ideal=False)
    p.add_argument("--element", required=True)

    p = add("multiply", "Multiply two elements")
    _inputs(p, alt=False, ideal=False)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = add("reduce", "Standard expression of an element")
    _inputs(p, required=False)
    p.add_argument("--gb", default="", help="Basis file written by `gb --output`")
    p.add_argument("--element", required=True)

    p = add("gb", "Gröbner basis of an ideal")
    _inputs(p)
    p.add_argument("--reduced", action="store_true")

    p = add("member", "Ideal membership through a basis file")
    p.add_argument("--gb", required=True)
    p.add_argument("--element", required=True)

    p = add("verify-gb", "Check that a candidate is a Gröbner basis of the ideal")
    _inputs(p)
    p.add_argument("--candidate", required=True)

    p = add("universal-check", "verify-gb across orders and algebras of leading terms")
    _inputs(p, alt=False)
    p.add_argument("--candidate", required=True)
    p.add_argument("--orders", default="builtin", help="builtin or a JSON file of orders")
    p.add_argument("--alts", default="gen,disc", help="Comma-separated gen, disc or custom files")
    p.add_argument("--max-degree", type=int, default=None)

    p = add("lcm", "Least common standard multiples of two leading monomials")
    _inputs(p, ideal=False)
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)

    p = add("lam", "Least annihilating monomials")
    _inputs(p, ideal=False)
    p.add_argument("--left", required=True)

    p = add("syzygy", "Schreyer syzygies of the reduced basis")
    _inputs(p)

    p = add("hilbert", "Hilbert series of A / I")
    _inputs(p, alt=False)

    p = add("dim", "Krull dimension of A / I")
    _inputs(p, alt=False)

    p = add("macaulay", "Standard monomials outside the leading ideal")
    p.add_argument("--gb", required=True)
    p.add_argument("--degree", type=int, required=True)

    p = add("verify-order", "Check the term order axioms up to a degree")
    _inputs(p, alt=False, ideal=False)
    p.add_argument("--max-degree", type=int, default=None)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not args.command:
        parser.print_help()
        return EXIT_INPUT

    session = Session.build(args)
    log = setup_logger(session)
    log.info("=== START %s ===", args.command)
    try:
        outcome = COMMANDS[args.command](session, args, log)
    except (InternalConsistencyError, NonTerminatingRewrite) as e:
        log.exception("[%s] internal failure", args.command)
        print(f"✗ Error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (PaslError, ConfigError, ValueError) as e:
        log.exception("[%s] failed", args.command)
        print(f"✗ Error: {e}", file=sys.stderr)
        return EXIT_INPUT

    print(session.emit(outcome.result, outcome.text))
    log.info("=== DONE %s ===", args.command)
    return EXIT_NEGATIVE if outcome.negative else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
