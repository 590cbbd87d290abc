from __future__ import annotations

from ..hilbert import GradedQuotientSpec, hilbert_pasl
from ..polyring import krull_dimension
from . import CommandResult, load_inputs


def _series(session, args, log):
    load_inputs(session, args, log)
    spec = GradedQuotientSpec(session.algebra, session.ideal, session.order)
    return hilbert_pasl(spec)


def cmd_hilbert(session, args, log) -> CommandResult:
    series = _series(session, args, log)
    doc = series.to_json()
    text = f"{doc['text']}\nnumerator: {doc['numerator']}\npole order: {doc['pole_order']}"
    return CommandResult(doc, text)


def cmd_dim(session, args, log) -> CommandResult:
    dim = krull_dimension(_series(session, args, log))
    return CommandResult({"dimension": str(dim)}, str(dim))
