from __future__ import annotations

from ..pasl import leading_monomial
from . import CommandResult, element_arg, load_inputs


def _monomials(session, monos) -> tuple[list, list[str]]:
    alg = session.algebra
    return [list(e) for e in monos], [alg.format_monomial(e) for e in monos]


def cmd_lcm(session, args, log) -> CommandResult:
    """Least common standard multiples of the leading monomials of --left and --right."""
    load_inputs(session, args, log)
    alt = session.alt
    a = leading_monomial(alt.order, element_arg(session, args.left, "--left"))
    b = leading_monomial(alt.order, element_arg(session, args.right, "--right"))
    monos = sorted(alt.lcm_set(a, b), key=alt.order.key, reverse=True)
    exps, names = _monomials(session, monos)
    log.info("[lcm] %d least common multiples", len(monos))
    return CommandResult({"monomials": exps, "text": names}, "\n".join(names) or "(none)")


def cmd_lam(session, args, log) -> CommandResult:
    """Least annihilating monomials of the leading monomial of --left."""
    load_inputs(session, args, log)
    alt = session.alt
    m = leading_monomial(alt.order, element_arg(session, args.left, "--left"))
    monos = sorted(alt.lam(m), key=alt.order.key, reverse=True)
    exps, names = _monomials(session, monos)
    return CommandResult({"monomials": exps, "text": names}, "\n".join(names) or "(none)")
