"""CLI commands. Each takes `(session, args, log)` and returns a CommandResult."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import InputFormatError
from ..formats import load_algebra, load_ideal, load_kind, load_order, parse_element
from ..pasl import PaslElement


@dataclass
class CommandResult:
    result: dict
    text: str
    # mathematical negative: member false, verification failed, order violated
    negative: bool = False


def load_inputs(session, args, log) -> None:
    """Fill the session from --algebra / --order / --alt / --ideal, whichever the command takes."""
    session.algebra = load_algebra(args.algebra, session.allow_large)
    session.order = load_order(session.algebra, getattr(args, "order", None))
    alt_spec = getattr(args, "alt", None)
    if alt_spec:
        session.kind = load_kind(alt_spec)
    ideal_spec = getattr(args, "ideal", None)
    if ideal_spec:
        session.ideal = load_ideal(session.algebra, ideal_spec)
    log.info(
        "[input] algebra with %d generators, order %s, %d ideal generators",
        session.algebra.nvars, session.order.name, len(session.ideal),
    )


def element_arg(session, text: str | None, flag: str) -> PaslElement:
    if text is None:
        raise InputFormatError(f"{flag} is required")
    return parse_element(session.algebra, text)
