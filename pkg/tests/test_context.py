import json
import logging
from types import SimpleNamespace

from pasl_groebner import context


def test_session_build_defaults():
    args = SimpleNamespace(command="dim")
    session = context.Session.build(args)
    assert session.command == "dim"
    assert session.output_format == "human"
    assert not session.verbose and not session.allow_large
    assert session.ideal == []


def test_emit_writes_the_result_document(tmp_path):
    target = tmp_path / "out" / "result.json"
    args = SimpleNamespace(command="dim", format="json", verbose=False, log_file="", output=str(target), allow_large=False)
    session = context.Session.build(args)
    rendered = session.emit({"dimension": "3"}, "3")
    doc = {"command": "dim", "result": {"dimension": "3"}}
    assert json.loads(rendered) == doc
    with open(target, "r", encoding="utf-8") as fh:
        assert json.load(fh) == doc

    session.output_format = "human"
    assert session.emit({"dimension": "3"}, "3") == "3"


def test_setup_logger_handlers(tmp_path, monkeypatch):
    monkeypatch.setattr(context, "LOG_LEVEL", "WARNING")
    log_file = tmp_path / "run.log"
    session = context.Session(command="gb", verbose=True, log_file=str(log_file))
    logger = context.setup_logger(session)
    try:
        assert logger.level == logging.DEBUG
        assert not logger.propagate
        kinds = [type(h) for h in logger.handlers]
        assert kinds == [logging.FileHandler, logging.StreamHandler]
        logger.info("[test] hello %s", "file")
        for h in logger.handlers:
            h.flush()
        assert "[test] hello file" in log_file.read_text(encoding="utf-8")
        logger.handlers[0].close()

        quiet = context.setup_logger(context.Session(command="gb"))
        assert quiet.level == logging.WARNING
        assert len(quiet.handlers) == 1
    finally:
        for h in logger.handlers:
            h.close()
        logger.handlers.clear()
