from __future__ import annotations

from ..errors import InternalConsistencyError
from ..formats import element_to_json, format_element
from ..groebner import pasl_groebner
from ..syzygy import evaluate_syzygy, schreyer_basis
from . import CommandResult, load_inputs


def _module_text(alg, order, syz) -> str:
    return " + ".join(f"({format_element(alg, f, order)})*e{i + 1}" for i, f in sorted(syz.components.items()))


def cmd_syzygy(session, args, log) -> CommandResult:
    """Reduced basis of the ideal, then the tau and beta syzygies on it."""
    load_inputs(session, args, log)
    alg, order = session.algebra, session.order
    gb = pasl_groebner(session.alt, session.ideal, reduced=True)
    basis = schreyer_basis(session.alt, gb)
    for syz in basis.syzygies:
        if evaluate_syzygy(alg, syz, gb.elements):
            raise InternalConsistencyError(f"syzygy {syz!r} does not evaluate to zero")
    result = {
        "basis": [element_to_json(g) for g in gb.elements],
        "tau": [s.to_json() for s in basis.tau],
        "beta": [s.to_json() for s in basis.beta],
    }
    lines = [f"g{i + 1} = {format_element(alg, g, order)}" for i, g in enumerate(gb.elements)]
    lines += [f"tau: {_module_text(alg, order, s)}" for s in basis.tau]
    lines += [f"beta: {_module_text(alg, order, s)}" for s in basis.beta]
    return CommandResult(result, "\n".join(lines))
