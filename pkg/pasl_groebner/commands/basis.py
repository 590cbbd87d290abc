from __future__ import annotations

from ..config import VALIDATE_DEGREE
from ..errors import InputFormatError
from ..formats import (
    element_to_json,
    format_element,
    gb_to_json,
    load_gb,
    load_ideal,
    load_kind,
    load_orders,
)
from ..groebner import macaulay_basis, membership, pasl_groebner, standard_expression, universal_check, verify_gb
from . import CommandResult, element_arg, load_inputs


def _basis_text(alg, order, elements) -> str:
    return "\n".join(format_element(alg, g, order) for g in elements) or "(empty basis)"


def _from_gb_file(session, args, log):
    gb = load_gb(args.gb, session.allow_large)
    session.algebra, session.order, session.kind = gb.algebra, gb.order, gb.kind
    log.info("[input] basis of %d elements from %s", len(gb), args.gb)
    return gb


def cmd_gb(session, args, log) -> CommandResult:
    load_inputs(session, args, log)
    gb = pasl_groebner(session.alt, session.ideal, reduced=args.reduced)
    doc = gb_to_json(gb)
    doc["text"] = [format_element(gb.algebra, g, gb.order) for g in gb.elements]
    return CommandResult(doc, _basis_text(gb.algebra, gb.order, gb.elements))


def cmd_reduce(session, args, log) -> CommandResult:
    if args.gb:
        gb = _from_gb_file(session, args, log)
        elements = gb.elements
    else:
        if not args.algebra or not args.ideal:
            raise InputFormatError("reduce needs --gb FILE or --algebra with --ideal")
        load_inputs(session, args, log)
        elements = pasl_groebner(session.alt, session.ideal).elements
    alg, order = session.algebra, session.order
    f = element_arg(session, args.element, "--element")
    expr = standard_expression(session.alt, f, elements)
    cofactors = {str(i + 1): element_to_json(h) for i, h in sorted(expr.cofactors.items())}
    result = {
        "remainder": element_to_json(expr.remainder),
        "remainder_text": format_element(alg, expr.remainder, order),
        "cofactors": cofactors,
    }
    lines = [f"remainder: {result['remainder_text']}"]
    lines += [f"g{i + 1}: {format_element(alg, h, order)}" for i, h in sorted(expr.cofactors.items())]
    return CommandResult(result, "\n".join(lines))


def cmd_member(session, args, log) -> CommandResult:
    gb = _from_gb_file(session, args, log)
    f = element_arg(session, args.element, "--element")
    found = membership(gb, f)
    return CommandResult({"member": found}, "true" if found else "false", negative=not found)


def cmd_verify_gb(session, args, log) -> CommandResult:
    load_inputs(session, args, log)
    candidate = load_ideal(session.algebra, args.candidate)
    ok = verify_gb(session.alt, session.ideal, candidate)
    return CommandResult({"gb": ok}, "true" if ok else "false", negative=not ok)


def cmd_universal_check(session, args, log) -> CommandResult:
    load_inputs(session, args, log)
    candidate = load_ideal(session.algebra, args.candidate)
    orders = load_orders(session.algebra, args.orders)
    kinds = [load_kind(k.strip()) for k in args.alts.split(",") if k.strip()]
    degree = args.max_degree if args.max_degree is not None else VALIDATE_DEGREE
    report = universal_check(session.algebra, session.ideal, candidate, orders, kinds, degree)
    text = "\n".join(f"{r['order']:<20} {r['alt']:<8} {r['status']}" for r in report.rows)
    return CommandResult(report.to_json(), text, negative=not report.ok)


def cmd_macaulay(session, args, log) -> CommandResult:
    gb = _from_gb_file(session, args, log)
    monos = macaulay_basis(gb, args.degree)
    names = [gb.algebra.format_monomial(e) for e in monos]
    result = {"degree": str(args.degree), "count": str(len(monos)), "monomials": [list(e) for e in monos], "text": names}
    return CommandResult(result, f"{len(monos)} standard monomials of degree {args.degree}\n" + "\n".join(names))
