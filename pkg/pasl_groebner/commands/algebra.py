from __future__ import annotations

from ..config import VALIDATE_DEGREE
from ..formats import element_to_json, format_element
from ..pasl import validate_term_order
from . import CommandResult, element_arg, load_inputs


def cmd_straighten(session, args, log) -> CommandResult:
    load_inputs(session, args, log)
    f = element_arg(session, args.element, "--element")
    text = format_element(session.algebra, f, session.order)
    log.info("[straighten] %d standard terms", len(f.terms))
    return CommandResult({"element": element_to_json(f), "text": text}, text)


def cmd_multiply(session, args, log) -> CommandResult:
    load_inputs(session, args, log)
    alg = session.algebra
    left = element_arg(session, args.left, "--left")
    right = element_arg(session, args.right, "--right")
    product = alg.multiply(left, right)
    text = format_element(alg, product, session.order)
    return CommandResult({"element": element_to_json(product), "text": text}, text)


def cmd_verify_order(session, args, log) -> CommandResult:
    load_inputs(session, args, log)
    degree = args.max_degree if args.max_degree is not None else VALIDATE_DEGREE
    report = validate_term_order(session.algebra, session.order, degree)
    if report.ok:
        text = f"order {session.order.name} is valid up to degree {degree}"
    else:
        text = f"order {session.order.name} fails: {report.violation}"
    return CommandResult(report.to_json(), text, negative=not report.ok)
