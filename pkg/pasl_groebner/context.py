from __future__ import annotations

import logging
import sys
from dataclasses import dataclass, field
from typing import Optional

from .config import LOG_LEVEL
from .ltalg import LtAlgebra, LtKind
from .pasl import PaslAlgebra, PaslElement, PaslTermOrder
from .utils import dumps, write_json


@dataclass
class Session:
    command: str
    output_format: str = "human"
    verbose: bool = False
    log_file: str = ""
    output: str = ""
    allow_large: bool = False
    # --- loaded lazily by the commands ---
    algebra: Optional[PaslAlgebra] = None
    order: Optional[PaslTermOrder] = None
    kind: Optional[LtKind] = None
    ideal: list[PaslElement] = field(default_factory=list)

    @staticmethod
    def build(args) -> "Session":
        return Session(
            command=args.command,
            output_format=getattr(args, "format", "human") or "human",
            verbose=bool(getattr(args, "verbose", False)),
            log_file=getattr(args, "log_file", "") or "",
            output=getattr(args, "output", "") or "",
            allow_large=bool(getattr(args, "allow_large", False)),
        )

    @property
    def alt(self) -> LtAlgebra:
        return LtAlgebra(self.algebra, self.order, self.kind)

    @property
    def json(self) -> bool:
        return self.output_format == "json"

    def emit(self, result: dict, text: str) -> str:
        """Render the command result; the JSON document also goes to --output when given."""
        doc = {"command": self.command, "result": result}
        if self.output:
            write_json(self.output, doc)
        return dumps(doc) if self.json else text


def setup_logger(session: Session) -> logging.Logger:
    logger = logging.getLogger("pasl_groebner")
    logger.setLevel(logging.DEBUG if session.verbose else LOG_LEVEL)
    logger.handlers.clear()
    logger.propagate = False

    formatter = logging.Formatter("%(asctime)s %(levelname)s: %(message)s")
    if session.log_file:
        fh = logging.FileHandler(session.log_file, encoding="utf-8")
        fh.setFormatter(formatter)
        logger.addHandler(fh)

    # stdout carries the command output; library modules log through child loggers
    sh = logging.StreamHandler(sys.stderr)
    sh.setFormatter(formatter)
    logger.addHandler(sh)
    return logger
