"""JSON file formats and the element literal syntax.

Algebras, orders, algebras of leading terms, ideals and bases are JSON
documents validated with pydantic; every coefficient travels as an exact "p/q"
string. Element literals look like `2*x11*x22 - 1/3*det(1 2|1 3)`.
"""
from __future__ import annotations

import os
import re
from fractions import Fraction
from typing import Literal, Optional, Sequence, Union

from pydantic import BaseModel, ValidationError, field_validator

from .bidet import BideterminantAlgebra, BitableauOrder, determinantal_basis, parse_bitableau
from .errors import InputFormatError, InvalidAlgebra
from .groebner import GroebnerBasis
from .ltalg import LtAlgebra, LtKind
from .pasl import (
    PaslAlgebra,
    PaslElement,
    PaslTermOrder,
    RuleAlgebra,
    WeightedLexOrder,
    no_term_order_algebra,
    no_term_order_algebra_2,
    polynomial_algebra,
)
from .polyring import ExpVec
from .utils import format_fraction, parse_fraction, read_json, terms_to_json


# --------------------------------------------------------------------------
# Models
# --------------------------------------------------------------------------


class TermModel(BaseModel):
    coeff: Union[str, int]
    mono: list[int]

    @field_validator("coeff")
    @classmethod
    def _exact(cls, v: Union[str, int]) -> str:
        try:
            return format_fraction(parse_fraction(v))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(str(exc)) from exc

    @field_validator("mono")
    @classmethod
    def _natural(cls, v: list[int]) -> list[int]:
        if any(e < 0 for e in v):
            raise ValueError("exponents must be non-negative")
        return v


class RelationModel(BaseModel):
    lhs: list[int]
    rhs: list[TermModel]


class OrderModel(BaseModel):
    kind: Literal["weighted-lex", "bitableau"]
    weights: Optional[list[int]] = None
    priority: Optional[list[Union[str, int]]] = None
    row_weights: Optional[list[int]] = None
    col_weights: Optional[list[int]] = None


class RuleAlgebraModel(BaseModel):
    generators: list[str]
    degrees: Optional[list[int]] = None
    sigma: list[list[int]] = []
    relations: list[RelationModel] = []
    order: Optional[OrderModel] = None
    rewrite_order: Optional[OrderModel] = None

    @field_validator("generators")
    @classmethod
    def _names(cls, v: list[str]) -> list[str]:
        for name in v:
            if not _NAME.fullmatch(name):
                raise ValueError(f"generator name {name!r} is not usable in element literals")
        return v


class BuiltinAlgebraModel(BaseModel):
    builtin: Literal["bideterminant", "polynomial", "no-term-order", "no-term-order-2"]
    rows: Optional[int] = None
    cols: Optional[int] = None
    generators: Optional[list[str]] = None


class AltModel(BaseModel):
    kind: Literal["gen", "disc", "custom"]
    zero_pairs: list[tuple[list[int], list[int]]] = []


class IdealModel(BaseModel):
    elements: list[Union[str, list[TermModel]]]


class GroebnerModel(BaseModel):
    algebra: dict
    order: Optional[OrderModel] = None
    alt: AltModel
    reduced: bool = False
    elements: list[list[TermModel]]


def _validated(model: type[BaseModel], doc: object, what: str) -> BaseModel:
    try:
        return model.model_validate(doc)
    except ValidationError as exc:
        raise InputFormatError(f"invalid {what}: {exc.errors()[0]['msg']}") from exc


def _read(path: str, what: str) -> object:
    try:
        doc = read_json(path)
    except ValueError as exc:
        raise InputFormatError(f"{path} is not valid JSON") from exc
    if doc is None:
        raise InputFormatError(f"{what} file {path} does not exist")
    return doc


def _terms(terms: Sequence[TermModel]) -> dict[ExpVec, Fraction]:
    out: dict[ExpVec, Fraction] = {}
    for t in terms:
        e = tuple(t.mono)
        out[e] = out.get(e, 0) + Fraction(t.coeff)
    return out


# --------------------------------------------------------------------------
# Element literals
# --------------------------------------------------------------------------

_NAME = re.compile(r"\[[\d,|\s]+\]|x\d+,\d+|[A-Za-z_][A-Za-z0-9_']*")
_TOKEN = re.compile(
    r"\s*(?:(?P<det>det\([^)]*\))|(?P<num>\d+(?:/\d+)?)|(?P<name>\[[\d,|\s]+\]|x\d+,\d+|[A-Za-z_][A-Za-z0-9_']*)"
    r"|(?P<op>[-+*^]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if not match or match.end() == pos:
            raise InputFormatError(f"unexpected input at {text[pos:pos + 12]!r}")
        kind = match.lastgroup
        tokens.append((kind, match.group(kind)))
        pos = match.end()
    return tokens


def _factor(alg: PaslAlgebra, kind: str, value: str) -> Union[Fraction, PaslElement]:
    if kind == "num":
        return Fraction(value)
    if kind == "det":
        if not isinstance(alg, BideterminantAlgebra):
            raise InputFormatError("det(...) factors need a bideterminant algebra")
        return alg.from_columns(parse_bitableau(value))
    try:
        return alg.generator(value)
    except InvalidAlgebra as exc:
        raise InputFormatError(str(exc)) from exc


def parse_element(alg: PaslAlgebra, text: str) -> PaslElement:
    """Sum of signed products; the products are computed (and straightened) in the algebra."""
    tokens = _tokenize(text)
    if not tokens:
        raise InputFormatError("empty element")
    total = alg.zero()
    pos = 0
    while pos < len(tokens):
        sign = 1
        start = pos
        while pos < len(tokens) and tokens[pos] in (("op", "+"), ("op", "-")):
            sign = -sign if tokens[pos][1] == "-" else sign
            pos += 1
        if start and pos == start:
            raise InputFormatError(f"expected + or - before {tokens[pos][1]!r}")
        coeff = Fraction(sign)
        value: PaslElement = alg.one()
        expect_factor = True
        while pos < len(tokens):
            kind, tok = tokens[pos]
            if expect_factor:
                if kind == "op":
                    raise InputFormatError(f"expected a factor before {tok!r}")
                item = _factor(alg, kind, tok)
                pos += 1
                power = 1
                if pos < len(tokens) and tokens[pos] == ("op", "^"):
                    if pos + 1 >= len(tokens) or tokens[pos + 1][0] != "num" or "/" in tokens[pos + 1][1]:
                        raise InputFormatError("exponent must be a non-negative integer")
                    power = int(tokens[pos + 1][1])
                    pos += 2
                for _ in range(power):
                    if isinstance(item, Fraction):
                        coeff *= item
                    else:
                        value = alg.multiply(value, item)
                expect_factor = False
            elif tokens[pos] == ("op", "*"):
                expect_factor = True
                pos += 1
            else:
                break
        if expect_factor:
            raise InputFormatError(f"dangling operator in {text!r}")
        total = total + value.scale(coeff)
    return total


def format_monomial(alg: PaslAlgebra, exp: ExpVec) -> str:
    return alg.format_monomial(exp)


def format_element(alg: PaslAlgebra, f: PaslElement, order: PaslTermOrder | None = None) -> str:
    """Terms greatest first; the output parses back to the same element."""
    if not f:
        return "0"
    if order is not None:
        items = sorted(f.terms.items(), key=lambda kv: order.key(kv[0]), reverse=True)
    else:
        items = sorted(f.terms.items(), reverse=True)
    parts = []
    for exp, c in items:
        mono = alg.format_monomial(exp) if any(exp) else ""
        mag = format_fraction(abs(c))
        if not mono:
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = f"{mag}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def element_to_json(f: PaslElement) -> list[dict]:
    return terms_to_json(f.terms)


def element_from_json(alg: PaslAlgebra, doc: object) -> PaslElement:
    if isinstance(doc, str):
        return parse_element(alg, doc)
    if not isinstance(doc, list):
        raise InputFormatError("an element is a literal string or a list of {coeff, mono} terms")
    terms = [_validated(TermModel, t, "term") for t in doc]
    for t in terms:
        if len(t.mono) != alg.nvars:
            raise InputFormatError(f"monomial {t.mono} does not have {alg.nvars} exponents")
    try:
        return alg.normalize(_terms(terms))
    except InvalidAlgebra as exc:
        raise InputFormatError(str(exc)) from exc


# --------------------------------------------------------------------------
# Algebras and orders
# --------------------------------------------------------------------------

_BIDET = re.compile(r"bidet:(\d+)x(\d+)")


def order_from_model(alg: PaslAlgebra, model: OrderModel) -> PaslTermOrder:
    if model.kind == "bitableau":
        if not isinstance(alg, BideterminantAlgebra):
            raise InputFormatError("bitableau orders need a bideterminant algebra")
        return BitableauOrder(
            alg,
            tuple(model.row_weights) if model.row_weights else None,
            tuple(model.col_weights) if model.col_weights else None,
        )
    return WeightedLexOrder.build(alg, model.weights, model.priority)


def order_to_json(alg: PaslAlgebra, order: PaslTermOrder) -> dict:
    if isinstance(order, WeightedLexOrder):
        return order.to_json(alg)
    if isinstance(order, BitableauOrder):
        return order.to_json()
    raise InputFormatError(f"order {order.name} has no file format")


def algebra_from_json(doc: object, allow_large: bool = False) -> PaslAlgebra:
    if isinstance(doc, dict) and "builtin" in doc:
        model = _validated(BuiltinAlgebraModel, doc, "algebra")
        if model.builtin == "bideterminant":
            if model.rows is None or model.cols is None:
                raise InputFormatError("bideterminant algebras need rows and cols")
            return BideterminantAlgebra(model.rows, model.cols, allow_large=allow_large)
        if model.builtin == "polynomial":
            if not model.generators:
                raise InputFormatError("polynomial algebras need generators")
            return polynomial_algebra(model.generators)
        if model.builtin == "no-term-order":
            return no_term_order_algebra()
        return no_term_order_algebra_2()
    model = _validated(RuleAlgebraModel, doc, "algebra")
    degrees = model.degrees if model.degrees is not None else [1] * len(model.generators)
    rules = {tuple(r.lhs): _terms(r.rhs) for r in model.relations}
    alg = RuleAlgebra(model.generators, degrees, [tuple(s) for s in model.sigma], rules)
    if model.order is not None:
        alg.order = order_from_model(alg, model.order)
    if model.rewrite_order is not None:
        alg.rewrite_order = order_from_model(alg, model.rewrite_order)
    return alg


def load_algebra(spec: str, allow_large: bool = False) -> PaslAlgebra:
    """`bidet:NxM`, `poly:x,y,z`, `example:no-term-order[-2]`, or a JSON file."""
    match = _BIDET.fullmatch(spec.strip())
    if match:
        return BideterminantAlgebra(int(match.group(1)), int(match.group(2)), allow_large=allow_large)
    if spec.startswith("poly:"):
        names = [n.strip() for n in spec[5:].split(",") if n.strip()]
        return polynomial_algebra(names)
    if spec == "example:no-term-order":
        return no_term_order_algebra()
    if spec == "example:no-term-order-2":
        return no_term_order_algebra_2()
    if not os.path.exists(spec):
        raise InputFormatError(f"unknown algebra {spec!r}: not a shorthand and not a file")
    return algebra_from_json(_read(spec, "algebra"), allow_large)


def load_order(alg: PaslAlgebra, spec: str | None) -> PaslTermOrder:
    if spec is None or spec == "default":
        return alg.default_order()
    if spec == "bitableau":
        return order_from_model(alg, OrderModel(kind="bitableau"))
    return order_from_model(alg, _validated(OrderModel, _read(spec, "order"), "order"))


def builtin_orders(alg: PaslAlgebra) -> list[PaslTermOrder]:
    """The default order plus two weighted variants."""
    if isinstance(alg, BideterminantAlgebra):
        return [
            BitableauOrder(alg),
            BitableauOrder(alg, row_weights=tuple(range(1, alg.n + 1))),
            BitableauOrder(alg, col_weights=tuple(range(alg.m, 0, -1))),
        ]
    return [
        alg.default_order(),
        WeightedLexOrder.build(alg, priority=list(reversed(range(alg.nvars)))),
    ]


def load_orders(alg: PaslAlgebra, spec: str) -> list[PaslTermOrder]:
    """`builtin`, or a JSON file holding one order or a list of orders."""
    if spec == "builtin":
        return builtin_orders(alg)
    doc = _read(spec, "order")
    docs = doc if isinstance(doc, list) else [doc]
    return [order_from_model(alg, _validated(OrderModel, d, "order")) for d in docs]


def kind_from_json(doc: object) -> LtKind:
    model = _validated(AltModel, doc, "algebra of leading terms")
    if model.kind == "custom":
        return LtKind.custom((tuple(a), tuple(b)) for a, b in model.zero_pairs)
    return LtKind(model.kind)


def load_kind(spec: str) -> LtKind:
    if spec in ("gen", "disc"):
        return LtKind(spec)
    return kind_from_json(_read(spec, "algebra of leading terms"))


def load_alt(alg: PaslAlgebra, order: PaslTermOrder, spec: str) -> LtAlgebra:
    return LtAlgebra(alg, order, load_kind(spec))


# --------------------------------------------------------------------------
# Ideals and bases
# --------------------------------------------------------------------------

_MINORS = re.compile(r"minors:(\d+)(\+?)")


def load_ideal(alg: PaslAlgebra, spec: str) -> list[PaslElement]:
    """`minors:r` (the r-minors), `minors:r+` (all minors of size >= r), a JSON file, or `;`-separated literals."""
    text = spec.strip()
    match = _MINORS.fullmatch(text)
    if match:
        if not isinstance(alg, BideterminantAlgebra):
            raise InputFormatError("minors:r needs a bideterminant algebra")
        r = int(match.group(1))
        gens = determinantal_basis(alg, r)
        if not match.group(2):
            gens = [g for g in gens if alg.degree(next(iter(g.terms))) == r]
        return gens
    if os.path.exists(text):
        doc = _read(text, "ideal")
        if isinstance(doc, list):
            doc = {"elements": doc}
        model = _validated(IdealModel, doc, "ideal")
        raw = [e if isinstance(e, str) else [t.model_dump() for t in e] for e in model.elements]
        return [element_from_json(alg, e) for e in raw]
    return [parse_element(alg, part) for part in text.split(";") if part.strip()]


def ideal_to_json(alg: PaslAlgebra, gens: Sequence[PaslElement]) -> dict:
    return {"elements": [element_to_json(g) for g in gens]}


def gb_to_json(gb: GroebnerBasis) -> dict:
    alg = gb.algebra
    return {
        "algebra": alg.to_json(),
        "order": order_to_json(alg, gb.order),
        "alt": gb.alt.to_json(),
        "reduced": gb.reduced,
        "elements": [element_to_json(g) for g in gb.elements],
    }


def gb_from_json(doc: object, allow_large: bool = False) -> GroebnerBasis:
    """Accepts a bare basis document or the output of `gb --format json`."""
    if isinstance(doc, dict) and doc.get("command") == "gb" and "result" in doc:
        doc = doc["result"]
    model = _validated(GroebnerModel, doc, "Gröbner basis")
    alg = algebra_from_json(model.algebra, allow_large)
    order = order_from_model(alg, model.order) if model.order is not None else alg.default_order()
    kind = kind_from_json(model.alt.model_dump())
    elements = []
    for terms in model.elements:
        f = PaslElement(alg.nvars, _terms(terms))
        for exp in f.terms:
            if len(exp) != alg.nvars or not alg.is_standard(exp):
                raise InputFormatError(f"basis element term {list(exp)} is not a standard monomial")
        elements.append(f)
    return GroebnerBasis(elements, LtAlgebra(alg, order, kind), model.reduced)


def load_gb(path: str, allow_large: bool = False) -> GroebnerBasis:
    return gb_from_json(_read(path, "Gröbner basis"), allow_large)
