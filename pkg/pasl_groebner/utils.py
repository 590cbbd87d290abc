from __future__ import annotations

import json
import os
from fractions import Fraction
from typing import Any, Iterable, Iterator, Mapping, TypeVar

from tqdm import tqdm

from .config import SHOW_PROGRESS

T = TypeVar("T")


def ensure_dir(path: str) -> str:
    os.makedirs(path, exist_ok=True)
    return path


def write_json(path: str, obj: Any) -> None:
    parent = os.path.dirname(os.path.abspath(path))
    ensure_dir(parent)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2, ensure_ascii=False)
        fh.write("\n")
    os.replace(tmp, path)


def read_json(path: str, default: Any = None) -> Any:
    if not os.path.exists(path):
        return default
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def parse_fraction(raw: Any) -> Fraction:
    """Exact rational from an int or a "p/q" / "n" string. Floats are rejected."""
    if isinstance(raw, bool) or isinstance(raw, float):
        raise ValueError(f"coefficients must be exact, got {raw!r}")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        text = raw.strip()
        if not text or any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {raw!r}")
        return Fraction(text)
    raise ValueError(f"not an exact rational: {raw!r}")


def format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def progress(items: Iterable[T], desc: str, total: int | None = None) -> Iterator[T]:
    if not SHOW_PROGRESS:
        yield from items
        return
    yield from tqdm(items, desc=desc, total=total, leave=False)


def terms_to_json(terms: Mapping[tuple[int, ...], Fraction]) -> list[dict]:
    """Canonical term list: exponent vectors in descending lexicographic order."""
    return [
        {"coeff": format_fraction(c), "mono": list(e)}
        for e, c in sorted(terms.items(), reverse=True)
    ]
