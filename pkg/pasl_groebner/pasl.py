"""Pseudo-ASLs: standard monomials, straightening-driven multiplication, term orders.

An algebra fixes a generator set H with positive degrees and a monomial ideal
Sigma of exponent vectors; the monomials outside Sigma (the standard monomials)
form a basis. Products of standard monomials are rewritten back into that basis,
either by user-supplied straightening rules or by a builtin oracle.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator, Mapping, Optional, Protocol, Sequence

from .config import REWRITE_FUEL, ZERODIVISOR_SAMPLE_DEGREE
from .errors import InvalidAlgebra, NonTerminatingRewrite, ZeroElement
from .polyring import (
    ExpVec,
    HilbertSeries,
    OrdTermOrder,
    Poly,
    divides,
    exp_add,
    exp_sub,
    hilbert_homogeneous,
    minimalize,
    weighted_degree,
)

log = logging.getLogger(__name__)


class PaslElement(Poly):
    """Element of a pseudo-ASL: standard monomial -> nonzero rational.

    Ring products depend on the algebra, so only scalar multiplication is
    available on the element itself; use `PaslAlgebra.multiply`.
    """

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, Poly):
            raise TypeError("multiply elements through their algebra")
        return self.scale(other)

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"PaslElement({self.to_text()})"

    def monomials(self) -> list[ExpVec]:
        return sorted(self.terms, reverse=True)


class PaslTermOrder(Protocol):
    name: str
    graded: bool

    def key(self, exp: ExpVec) -> tuple: ...


@dataclass(frozen=True)
class WeightedLexOrder:
    """Weighted degree first, then lexicographic by generator priority (first = most significant)."""

    weights: tuple[int, ...]
    priority: tuple[int, ...]
    graded: bool = False
    name: str = "weighted-lex"

    def __post_init__(self) -> None:
        if any(w <= 0 for w in self.weights):
            raise InvalidAlgebra("order weights must be positive")
        if sorted(self.priority) != list(range(len(self.weights))):
            raise InvalidAlgebra("order priority must list every generator exactly once")

    @classmethod
    def build(cls, alg: "PaslAlgebra", weights: Sequence[int] | None = None,
              priority: Sequence[int | str] | None = None) -> "WeightedLexOrder":
        weights = tuple(weights) if weights is not None else alg.degrees
        if len(weights) != alg.nvars:
            raise InvalidAlgebra(f"order needs {alg.nvars} weights, got {len(weights)}")
        if priority is None:
            prio = tuple(range(alg.nvars))
        else:
            prio = tuple(alg.index(p) if isinstance(p, str) else int(p) for p in priority)
        graded = _proportional(weights, alg.degrees)
        return cls(weights, prio, graded)

    def key(self, exp: ExpVec) -> tuple:
        return (weighted_degree(exp, self.weights), tuple(exp[p] for p in self.priority))

    def to_json(self, alg: "PaslAlgebra") -> dict:
        return {
            "kind": "weighted-lex",
            "weights": list(self.weights),
            "priority": [alg.names[p] for p in self.priority],
        }


def _proportional(weights: Sequence[int], degrees: Sequence[int]) -> bool:
    a, b = weights[0], degrees[0]
    return all(w * b == d * a for w, d in zip(weights, degrees))


def leading_term(order: PaslTermOrder, f: Poly) -> tuple[Fraction, ExpVec]:
    if not f:
        raise ZeroElement("the zero element has no leading term")
    exp = max(f.terms, key=order.key)
    return f.terms[exp], exp


def leading_monomial(order: PaslTermOrder, f: Poly) -> ExpVec:
    return leading_term(order, f)[1]


class _Fuel:
    __slots__ = ("left",)

    def __init__(self, budget: int):
        self.left = budget

    def spend(self, what: object) -> None:
        self.left -= 1
        if self.left < 0:
            raise NonTerminatingRewrite(f"rewrite budget exhausted while straightening {what}")


class PaslAlgebra:
    """Common machinery; subclasses provide `straighten_exp`."""

    kind = "abstract"

    def __init__(self, names: Sequence[str], degrees: Sequence[int], sigma: Sequence[ExpVec]):
        names = tuple(names)
        degrees = tuple(int(d) for d in degrees)
        if len(set(names)) != len(names):
            raise InvalidAlgebra("generator names must be unique")
        if len(degrees) != len(names):
            raise InvalidAlgebra(f"{len(names)} generators but {len(degrees)} degrees")
        if any(d < 1 for d in degrees):
            raise InvalidAlgebra("generator degrees must be positive")
        sigma = [tuple(int(e) for e in s) for s in sigma]
        for s in sigma:
            if len(s) != len(names) or any(e < 0 for e in s):
                raise InvalidAlgebra(f"sigma generator {list(s)} is not an exponent vector over H")
            if sum(s) <= 1:
                raise InvalidAlgebra(f"sigma generator {list(s)} is 1 or a single generator")
        if len(minimalize(sigma)) != len(set(sigma)):
            raise InvalidAlgebra("sigma generators must be pairwise incomparable")
        self.names = names
        self.degrees = degrees
        self.sigma: tuple[ExpVec, ...] = tuple(sorted(set(sigma), reverse=True))
        self._index = {n: i for i, n in enumerate(names)}
        self._standard_cache: dict[int, list[ExpVec]] = {}
        self._domain: Optional[bool] = None

    # -- basics ------------------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError as exc:
            raise InvalidAlgebra(f"unknown generator {name!r}") from exc

    def degree(self, exp: ExpVec) -> int:
        return weighted_degree(exp, self.degrees)

    def is_standard(self, exp: ExpVec) -> bool:
        if len(exp) != self.nvars:
            raise ValueError(f"exponent {exp} does not have {self.nvars} entries")
        return not any(divides(s, exp) for s in self.sigma)

    def zero(self) -> PaslElement:
        return PaslElement.zero(self.nvars)

    def one(self) -> PaslElement:
        return PaslElement.constant(self.nvars)

    def monomial(self, exp: ExpVec, c: Fraction | int = 1) -> PaslElement:
        if not self.is_standard(exp):
            raise InvalidAlgebra(f"{self.format_monomial(exp)} is not a standard monomial")
        return PaslElement(self.nvars, {tuple(exp): c})

    def generator(self, name: str) -> PaslElement:
        exp = [0] * self.nvars
        exp[self.index(name)] = 1
        return self.monomial(tuple(exp))

    def element(self, terms: Mapping[ExpVec, Fraction | int]) -> PaslElement:
        for exp in terms:
            if not self.is_standard(tuple(exp)):
                raise InvalidAlgebra(f"{self.format_monomial(tuple(exp))} is not a standard monomial")
        return PaslElement(self.nvars, terms)

    def normalize(self, terms: Mapping[ExpVec, Fraction | int]) -> PaslElement:
        """Element of arbitrary monomials, each straightened into the standard basis."""
        out: dict[ExpVec, Fraction] = {}
        for exp, c in terms.items():
            for e, v in self.straighten_exp(tuple(exp)).items():
                out[e] = out.get(e, 0) + Fraction(c) * v
        return PaslElement(self.nvars, out)

    def format_monomial(self, exp: ExpVec) -> str:
        parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(self.names, exp) if e]
        return "*".join(parts) or "1"

    # -- multiplication ----------------------------------------------------
    def straighten_exp(self, exp: ExpVec) -> Mapping[ExpVec, Fraction]:
        raise NotImplementedError

    def multiply_monomials(self, a: ExpVec, b: ExpVec) -> Mapping[ExpVec, Fraction]:
        return self.straighten_exp(exp_add(a, b))

    def multiply(self, f: Poly, g: Poly) -> PaslElement:
        out: dict[ExpVec, Fraction] = {}
        for e1, c1 in f.terms.items():
            for e2, c2 in g.terms.items():
                for e, v in self.multiply_monomials(e1, e2).items():
                    out[e] = out.get(e, 0) + c1 * c2 * v
        return PaslElement(self.nvars, out)

    def multiply_term(self, exp: ExpVec, c: Fraction, g: Poly) -> PaslElement:
        return self.multiply(PaslElement(self.nvars, {exp: c}), g)

    def leading_product(self, order: PaslTermOrder, a: ExpVec, b: ExpVec) -> Optional[tuple[Fraction, ExpVec]]:
        """LT of the product of two standard monomials, or None when it is zero."""
        product = self.multiply_monomials(a, b)
        if not product:
            return None
        exp = max(product, key=order.key)
        return product[exp], exp

    # -- enumeration ------------------------------------------------------
    def enumerate_standard(self, degree: int) -> list[ExpVec]:
        """All standard monomials of the given degree, descending exponent-lex."""
        if degree < 0:
            return []
        if degree not in self._standard_cache:
            found: list[ExpVec] = []
            current = [0] * self.nvars

            def walk(pos: int, left: int) -> None:
                if left == 0:
                    found.append(tuple(current))
                    return
                if pos == self.nvars:
                    return
                d = self.degrees[pos]
                k = left // d
                while k >= 0:
                    current[pos] = k
                    if k == 0 or self.is_standard(tuple(current)):
                        walk(pos + 1, left - k * d)
                    k -= 1
                current[pos] = 0

            walk(0, degree)
            self._standard_cache[degree] = sorted(found, reverse=True)
        return list(self._standard_cache[degree])

    def standard_upto(self, degree: int) -> Iterator[ExpVec]:
        for d in range(degree + 1):
            yield from self.enumerate_standard(d)

    # -- structure --------------------------------------------------------
    def presentation(self) -> list[Poly]:
        """Straightening relations x^sigma - straighten(sigma) in the polynomial ring on H."""
        rels = []
        for s in self.sigma:
            terms: dict[ExpVec, Fraction] = {s: Fraction(1)}
            for e, c in self.straighten_exp(s).items():
                terms[e] = terms.get(e, 0) - c
            rels.append(Poly(self.nvars, terms))
        return rels

    def quotient_series(self, gens: Sequence[Poly]) -> HilbertSeries:
        """Hilbert series of A / <gens>, computed in the polynomial ring on H."""
        ring = OrdTermOrder.degrevlex(self.nvars, self.degrees)
        lifted = self.presentation() + [Poly(self.nvars, g.terms) for g in gens if g]
        return hilbert_homogeneous(lifted, self.degrees, ring)

    def is_domain(self) -> bool:
        """Sampled: no product of standard monomials up to the sample degree vanishes."""
        if self._domain is None:
            self._domain = not any(
                self.is_zerodivisor(m) for d in range(1, ZERODIVISOR_SAMPLE_DEGREE + 1)
                for m in self.enumerate_standard(d)
            )
        return self._domain

    def is_zerodivisor(self, m: ExpVec, sample_degree: int | None = None) -> bool:
        top = sample_degree if sample_degree is not None else ZERODIVISOR_SAMPLE_DEGREE
        for d in range(1, top + 1):
            for s in self.enumerate_standard(d):
                if not self.multiply_monomials(s, m):
                    return True
        return False

    def default_order(self) -> PaslTermOrder:
        return WeightedLexOrder.build(self)

    def to_json(self) -> dict:
        raise NotImplementedError


class RuleAlgebra(PaslAlgebra):
    """Pseudo-ASL given by one straightening rule per Sigma generator.

    A Sigma monomial is rewritten through the first dividing Sigma generator:
    quotient times the stored right-hand side. Rewriting is memoized; loops are
    caught by a cycle check and a step budget, and when `rewrite_order` is set
    every rewrite must strictly decrease under it.
    """

    kind = "rules"

    def __init__(self, names: Sequence[str], degrees: Sequence[int], sigma: Sequence[ExpVec],
                 rules: Mapping[ExpVec, Mapping[ExpVec, Fraction | int]],
                 order: Optional[PaslTermOrder] = None,
                 rewrite_order: Optional[PaslTermOrder] = None,
                 fuel: int | None = None):
        super().__init__(names, degrees, sigma)
        clean: dict[ExpVec, dict[ExpVec, Fraction]] = {}
        for lhs, rhs in rules.items():
            lhs = tuple(lhs)
            if lhs not in self.sigma:
                raise InvalidAlgebra(f"rule lhs {self.format_monomial(lhs)} is not a sigma generator")
            out: dict[ExpVec, Fraction] = {}
            for mono, coeff in rhs.items():
                mono = tuple(mono)
                if len(mono) != self.nvars or not self.is_standard(mono):
                    raise InvalidAlgebra(
                        f"rule for {self.format_monomial(lhs)}: {list(mono)} is not a standard monomial"
                    )
                if self.degree(mono) != self.degree(lhs):
                    raise InvalidAlgebra(f"rule for {self.format_monomial(lhs)} does not preserve degree")
                c = Fraction(coeff)
                if c:
                    out[mono] = c
            clean[lhs] = out
        missing = [s for s in self.sigma if s not in clean]
        if missing:
            raise InvalidAlgebra(
                "no straightening rule for " + ", ".join(self.format_monomial(s) for s in missing)
            )
        self.rules = clean
        self.order = order
        self.rewrite_order = rewrite_order
        self.fuel = fuel if fuel is not None else REWRITE_FUEL
        self._cache: dict[ExpVec, dict[ExpVec, Fraction]] = {}

    def straighten_exp(self, exp: ExpVec) -> Mapping[ExpVec, Fraction]:
        exp = tuple(exp)
        if self.is_standard(exp):
            return {exp: Fraction(1)}
        return self._rewrite(exp, _Fuel(self.fuel), set())

    def _rewrite(self, exp: ExpVec, fuel: _Fuel, stack: set[ExpVec]) -> dict[ExpVec, Fraction]:
        cached = self._cache.get(exp)
        if cached is not None:
            return cached
        if self.is_standard(exp):
            return {exp: Fraction(1)}
        if exp in stack:
            raise NonTerminatingRewrite(f"straightening {self.format_monomial(exp)} cycles")
        fuel.spend(self.format_monomial(exp))
        lhs = next(s for s in self.sigma if divides(s, exp))
        quotient = exp_sub(exp, lhs)
        stack.add(exp)
        result: dict[ExpVec, Fraction] = {}
        try:
            for mono, c in self.rules[lhs].items():
                target = exp_add(mono, quotient)
                if self.rewrite_order is not None and \
                        self.rewrite_order.key(target) >= self.rewrite_order.key(exp):
                    raise NonTerminatingRewrite(
                        f"rewrite {self.format_monomial(exp)} -> {self.format_monomial(target)} "
                        "does not decrease"
                    )
                for e, v in self._rewrite(target, fuel, stack).items():
                    val = result.get(e, 0) + c * v
                    if val:
                        result[e] = val
                    else:
                        result.pop(e, None)
        finally:
            stack.discard(exp)
        self._cache[exp] = result
        return result

    def default_order(self) -> PaslTermOrder:
        return self.order if self.order is not None else WeightedLexOrder.build(self)

    def to_json(self) -> dict:
        from .utils import format_fraction

        doc = {
            "generators": list(self.names),
            "degrees": list(self.degrees),
            "sigma": [list(s) for s in self.sigma],
            "relations": [
                {
                    "lhs": list(lhs),
                    "rhs": [{"coeff": format_fraction(c), "mono": list(m)}
                            for m, c in sorted(rhs.items(), reverse=True)],
                }
                for lhs, rhs in sorted(self.rules.items(), reverse=True)
            ],
        }
        if isinstance(self.order, WeightedLexOrder):
            doc["order"] = self.order.to_json(self)
        return doc


def polynomial_algebra(names: Sequence[str], degrees: Sequence[int] | None = None) -> RuleAlgebra:
    """The polynomial ring as a pseudo-ASL with empty Sigma."""
    degrees = degrees if degrees is not None else [1] * len(names)
    return RuleAlgebra(names, degrees, [], {})


def no_term_order_algebra() -> RuleAlgebra:
    """R[x, y] / (x^2 - xy): standard monomials y^j and x*y^j; admits no term order."""
    return RuleAlgebra(["x", "y"], [1, 1], [(2, 0)], {(2, 0): {(1, 1): 1}})


def no_term_order_algebra_2() -> RuleAlgebra:
    """R[x, y] / (x^2 - y^2) with the same standard monomials; also admits no term order."""
    return RuleAlgebra(["x", "y"], [1, 1], [(2, 0)], {(2, 0): {(0, 2): 1}})


# --------------------------------------------------------------------------
# Term order validation
# --------------------------------------------------------------------------


@dataclass
class ValidationReport:
    ok: bool
    max_degree: int
    checked_monomials: int
    checked_products: int
    violation: Optional[dict] = None
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "max_degree": str(self.max_degree),
            "checked_monomials": str(self.checked_monomials),
            "checked_products": str(self.checked_products),
            "violation": self.violation,
        }


ProductLM = Callable[[ExpVec, ExpVec], Optional[ExpVec]]


def validate_term_order(alg: PaslAlgebra, order: PaslTermOrder, max_degree: int,
                        product_lm: ProductLM | None = None) -> ValidationReport:
    """Check ATO-1 and ATO-2 on all standard monomials up to `max_degree`.

    `product_lm(a, b)` returns LM(ab) or None for a zero product; it defaults to
    the algebra's own multiplication so the same check can run on an algebra of
    leading terms. A pass is evidence, not proof.
    """
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    if product_lm is None:
        def product_lm(a: ExpVec, b: ExpVec) -> Optional[ExpVec]:
            lt = alg.leading_product(order, a, b)
            return None if lt is None else lt[1]

    monos = sorted(alg.standard_upto(max_degree), key=order.key)
    keys = [order.key(m) for m in monos]
    fmt = alg.format_monomial
    for a, b, ka, kb in zip(monos, monos[1:], keys, keys[1:]):
        if ka == kb:
            return ValidationReport(False, max_degree, len(monos), 0, {
                "rule": "total", "f": fmt(a), "g": fmt(b),
                "detail": "two standard monomials compare equal",
            })
    one = (0,) * alg.nvars
    if monos[0] != one:
        return ValidationReport(False, max_degree, len(monos), 0, {
            "rule": "ATO-1", "f": fmt(monos[0]), "detail": "monomial smaller than 1",
        })

    n = len(monos)
    degs = [alg.degree(m) for m in monos]
    products: dict[tuple[int, int], Optional[tuple]] = {}
    lms: dict[tuple[int, int], ExpVec] = {}
    checked = 0
    for i in range(n):
        for j in range(i, n):
            if degs[i] + degs[j] > max_degree:
                continue
            lm = product_lm(monos[i], monos[j])
            checked += 1
            if lm is None:
                continue
            products[(i, j)] = products[(j, i)] = order.key(lm)
            lms[(i, j)] = lms[(j, i)] = lm

    # prev[j] = max over rows i' < i and columns j' <= j, with its witness cell
    prev: list[Optional[tuple[tuple, tuple[int, int]]]] = [None] * n
    for i in range(n):
        row_best: Optional[tuple[tuple, tuple[int, int]]] = None
        current_row: list[Optional[tuple[tuple, tuple[int, int]]]] = [None] * n
        for j in range(n):
            cell = products.get((i, j))
            best = prev[j]
            if cell is not None and best is not None and best[0] >= cell:
                fi, hi = best[1]
                return ValidationReport(False, max_degree, n, checked, {
                    "rule": "ATO-2",
                    "f": fmt(monos[fi]), "g": fmt(monos[i]),
                    "h": fmt(monos[hi]), "k": fmt(monos[j]),
                    "lm_fh": fmt(lms[(fi, hi)]), "lm_gk": fmt(lms[(i, j)]),
                    "detail": "f < g and h <= k but LM(fh) >= LM(gk)",
                })
            if cell is not None and (row_best is None or cell > row_best[0]):
                row_best = (cell, (i, j))
            current_row[j] = row_best
        for j in range(n):
            cand = current_row[j]
            if cand is not None and (prev[j] is None or cand[0] > prev[j][0]):
                prev[j] = cand
    log.debug("[order] %s: no violation up to degree %d (%d products)", order.name, max_degree, checked)
    return ValidationReport(True, max_degree, n, checked)
