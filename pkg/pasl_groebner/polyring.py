"""Multivariate polynomials over the rationals.

Buchberger, elimination, intersection and colon ideals, and Hilbert series of
monomial ideals. The generic algebra-of-leading-terms routes and the
Ann-closure oracle run on top of this module.
"""
from __future__ import annotations

import heapq
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

import sympy

from .errors import NonHomogeneousInput

log = logging.getLogger(__name__)

ExpVec = tuple[int, ...]

ORDER_KINDS = ("lex", "deglex", "degrevlex", "weighted-lex", "diagonal")


def divides(a: ExpVec, b: ExpVec) -> bool:
    return all(x <= y for x, y in zip(a, b))


def exp_add(a: ExpVec, b: ExpVec) -> ExpVec:
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a: ExpVec, b: ExpVec) -> ExpVec:
    return tuple(x - y for x, y in zip(a, b))


def exp_lcm(a: ExpVec, b: ExpVec) -> ExpVec:
    return tuple(max(x, y) for x, y in zip(a, b))


def weighted_degree(exp: ExpVec, weights: Sequence[int] | None = None) -> int:
    if weights is None:
        return sum(exp)
    return sum(w * e for w, e in zip(weights, exp))


class Poly:
    """Immutable sparse polynomial: ExpVec -> nonzero Fraction."""

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[ExpVec, Fraction | int] | None = None):
        self.nvars = nvars
        clean: dict[ExpVec, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = Fraction(coeff)
            if c:
                clean[tuple(exp)] = c
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict[ExpVec, Fraction]) -> "Poly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: Fraction | int = 1) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: ExpVec, c: Fraction | int = 1) -> "Poly":
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Poly":
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, {tuple(exp): 1})

    @property
    def terms(self) -> Mapping[ExpVec, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Poly({self.to_text()})"

    def _check(self, other: "Poly") -> None:
        if other.nvars != self.nvars:
            raise ValueError(f"ring mismatch: {self.nvars} vs {other.nvars} variables")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        out = dict(self._terms)
        for exp, c in other._terms.items():
            v = out.get(exp, 0) + c
            if v:
                out[exp] = v
            else:
                out.pop(exp, None)
        return self._raw(self.nvars, out)

    def __neg__(self) -> "Poly":
        return self._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c: Fraction | int) -> "Poly":
        c = Fraction(c)
        if not c:
            return self.zero(self.nvars)
        return self._raw(self.nvars, {e: v * c for e, v in self._terms.items()})

    def shift(self, exp: ExpVec, c: Fraction | int = 1) -> "Poly":
        """Multiply by the term c*x^exp."""
        c = Fraction(c)
        if not c:
            return self.zero(self.nvars)
        return self._raw(self.nvars, {exp_add(e, exp): v * c for e, v in self._terms.items()})

    def __mul__(self, other: "Poly | Fraction | int") -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        out: dict[ExpVec, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = exp_add(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return self._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def degrees(self, weights: Sequence[int] | None = None) -> set[int]:
        return {weighted_degree(e, weights) for e in self._terms}

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        return len(self.degrees(weights)) <= 1

    def extend(self, extra: int = 1) -> "Poly":
        pad = (0,) * extra
        return Poly._raw(self.nvars + extra, {e + pad: c for e, c in self._terms.items()})

    def drop_last(self) -> "Poly":
        out: dict[ExpVec, Fraction] = {}
        for e, c in self._terms.items():
            if e[-1]:
                raise ValueError("cannot drop a variable that occurs")
            out[e[:-1]] = c
        return Poly._raw(self.nvars - 1, out)

    def leading_term(self, order: "OrdTermOrder") -> tuple[Fraction, ExpVec]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self._terms, key=order.key)
        return self._terms[exp], exp

    def monic(self, order: "OrdTermOrder") -> "Poly":
        lc, _ = self.leading_term(order)
        return self.scale(1 / lc)

    def sorted_terms(self) -> list[tuple[ExpVec, Fraction]]:
        return sorted(self._terms.items(), reverse=True)

    def to_text(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exp) if e
            )
            mag = abs(c)
            sign = "-" if c < 0 else "+"
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


@dataclass(frozen=True)
class OrdTermOrder:
    """Monomial order on a polynomial ring; key(exp) is larger for larger monomials.

    `perm` lists variable indices from most to least significant.
    """

    kind: str
    nvars: int
    weights: tuple[int, ...] | None = None
    perm: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.weights is not None:
            if len(self.weights) != self.nvars or any(w <= 0 for w in self.weights):
                raise ValueError("weights must be positive, one per variable")
        if self.perm is not None and sorted(self.perm) != list(range(self.nvars)):
            raise ValueError("perm must be a permutation of the variable indices")
        if self.kind == "weighted-lex" and self.weights is None:
            raise ValueError("weighted-lex needs weights")

    @classmethod
    def lex(cls, nvars: int, perm: Sequence[int] | None = None) -> "OrdTermOrder":
        return cls("lex", nvars, None, tuple(perm) if perm is not None else None)

    @classmethod
    def deglex(cls, nvars: int, weights: Sequence[int] | None = None) -> "OrdTermOrder":
        return cls("deglex", nvars, tuple(weights) if weights is not None else None)

    @classmethod
    def degrevlex(cls, nvars: int, weights: Sequence[int] | None = None) -> "OrdTermOrder":
        return cls("degrevlex", nvars, tuple(weights) if weights is not None else None)

    @classmethod
    def diagonal(cls, n: int, m: int) -> "OrdTermOrder":
        """Lex on x11 > x12 > ... > xnm, so a minor's leading monomial is its main diagonal."""
        return cls("diagonal", n * m)

    def _order(self) -> Sequence[int]:
        return self.perm if self.perm is not None else range(self.nvars)

    def key(self, exp: ExpVec) -> tuple:
        order = self._order()
        lex = tuple(exp[i] for i in order)
        if self.kind in ("lex", "diagonal"):
            return lex
        deg = weighted_degree(exp, self.weights)
        if self.kind == "degrevlex":
            return (deg, tuple(-exp[i] for i in reversed(order)))
        return (deg, lex)

    def eliminating(self) -> "EliminationOrder":
        return EliminationOrder(self)


@dataclass(frozen=True)
class EliminationOrder:
    """Block order on one extra trailing variable t, with t greater than every base monomial."""

    base: OrdTermOrder

    @property
    def nvars(self) -> int:
        return self.base.nvars + 1

    def key(self, exp: ExpVec) -> tuple:
        return (exp[-1],) + self.base.key(exp[:-1])


def _leads(G: Sequence[Poly], order) -> list[tuple[ExpVec, Fraction, Poly]]:
    out = []
    for g in G:
        lc, lm = g.leading_term(order)
        out.append((lm, lc, g))
    return out


def divide(f: Poly, G: Sequence[Poly], order) -> tuple[list[Poly], Poly]:
    """Multivariate division: f = sum(q_i * g_i) + r, no term of r divisible by any LM(g_i)."""
    leads = _leads(G, order)
    nvars = f.nvars
    p: dict[ExpVec, Fraction] = dict(f.terms)
    quotients: list[dict[ExpVec, Fraction]] = [{} for _ in G]
    rem: dict[ExpVec, Fraction] = {}
    while p:
        m = max(p, key=order.key)
        c = p[m]
        for idx, (lm, lc, g) in enumerate(leads):
            if divides(lm, m):
                q = exp_sub(m, lm)
                coef = c / lc
                quotients[idx][q] = quotients[idx].get(q, 0) + coef
                for e, a in g.terms.items():
                    key = exp_add(e, q)
                    v = p.get(key, 0) - coef * a
                    if v:
                        p[key] = v
                    else:
                        p.pop(key, None)
                break
        else:
            rem[m] = c
            del p[m]
    return [Poly(nvars, q) for q in quotients], Poly._raw(nvars, rem)


def normal_form(f: Poly, G: Sequence[Poly], order) -> Poly:
    if not G:
        return f
    return divide(f, G, order)[1]


def s_polynomial(f: Poly, g: Poly, order) -> Poly:
    lcf, lmf = f.leading_term(order)
    lcg, lmg = g.leading_term(order)
    lcm = exp_lcm(lmf, lmg)
    return f.shift(exp_sub(lcm, lmf), 1 / lcf) - g.shift(exp_sub(lcm, lmg), 1 / lcg)


def reduce_groebner(G: Sequence[Poly], order) -> list[Poly]:
    """Minimalize, interreduce and normalize a Groebner basis; output sorted by leading monomial."""
    basis = [g.monic(order) for g in G if g]
    leads = [g.leading_term(order)[1] for g in basis]
    keep: list[Poly] = []
    for i, g in enumerate(basis):
        lm = leads[i]
        redundant = False
        for j, other in enumerate(leads):
            if j == i or not divides(other, lm):
                continue
            if other != lm or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(g)
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        reduced.append(normal_form(g, others, order).monic(order))
    reduced.sort(key=lambda p: order.key(p.leading_term(order)[1]))
    return reduced


def ord_buchberger(gens: Iterable[Poly], order) -> list[Poly]:
    """Reduced Groebner basis of <gens> (normal selection strategy, product criterion)."""
    G = [g.monic(order) for g in gens if g]
    if not G:
        return []
    leads = [g.leading_term(order)[1] for g in G]
    heap: list[tuple[int, int, int]] = []

    def push_pairs(new: int) -> None:
        for i in range(new):
            heapq.heappush(heap, (sum(exp_lcm(leads[i], leads[new])), i, new))

    for j in range(1, len(G)):
        push_pairs(j)
    steps = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        a, b = leads[i], leads[j]
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue
        r = normal_form(s_polynomial(G[i], G[j], order), G, order)
        steps += 1
        if r:
            r = r.monic(order)
            G.append(r)
            leads.append(r.leading_term(order)[1])
            push_pairs(len(G) - 1)
    log.debug("[buchberger] %d pairs reduced, %d elements before reduction", steps, len(G))
    return reduce_groebner(G, order)


def is_groebner(G: Sequence[Poly], order) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    basis = [g for g in G if g]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if normal_form(s_polynomial(basis[i], basis[j], order), basis, order):
                return False
    return True


def ideal_intersection(I: Sequence[Poly], J: Sequence[Poly], order: OrdTermOrder) -> list[Poly]:
    I = [f for f in I if f]
    J = [g for g in J if g]
    if not I or not J:
        return []
    n = I[0].nvars
    t = Poly.variable(n + 1, n)
    one_minus_t = Poly.constant(n + 1) - t
    gens = [f.extend() * t for f in I] + [g.extend() * one_minus_t for g in J]
    G = ord_buchberger(gens, order.eliminating())
    return [g.drop_last() for g in G if all(e[-1] == 0 for e in g.terms)]


def exact_quotient(g: Poly, f: Poly, order) -> Poly:
    (q,), r = divide(g, [f], order)
    if r:
        raise ValueError("polynomial is not divisible")
    return q


def colon_ideal(I: Sequence[Poly], f: Poly, order: OrdTermOrder) -> list[Poly]:
    if not f:
        raise ValueError("colon by the zero polynomial")
    inter = ideal_intersection(I, [f], order)
    return ord_buchberger([exact_quotient(g, f, order) for g in inter], order)


# --------------------------------------------------------------------------
# Monomial ideals and Hilbert series
# --------------------------------------------------------------------------


def minimalize(gens: Iterable[ExpVec]) -> tuple[ExpVec, ...]:
    uniq = sorted(set(tuple(g) for g in gens), key=lambda e: (sum(e), e))
    out: list[ExpVec] = []
    for g in uniq:
        if not any(divides(h, g) for h in out):
            out.append(g)
    return tuple(sorted(out))


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    generators: tuple[ExpVec, ...]

    @classmethod
    def from_generators(cls, nvars: int, gens: Iterable[ExpVec]) -> "MonomialIdeal":
        gens = list(gens)
        for g in gens:
            if len(g) != nvars:
                raise ValueError(f"generator {g} does not have {nvars} entries")
        return cls(nvars, minimalize(gens))

    def contains(self, exp: ExpVec) -> bool:
        return any(divides(g, exp) for g in self.generators)

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.generators)


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, y in enumerate(b):
        out[i] += y
    return _trim(out)


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _one_minus(d: int) -> list[int]:
    return [1] + [0] * (d - 1) + [-1]


_T = sympy.Symbol("t")


def _psi(e: int) -> sympy.Poly:
    if e == 1:
        return sympy.Poly(1 - _T, _T, domain="ZZ")
    return sympy.cyclotomic_poly(e, _T, polys=True)


def _to_sympy(coeffs: Sequence[int]) -> sympy.Poly:
    return sympy.Poly(list(reversed(coeffs)) or [0], _T, domain="ZZ")


def _from_sympy(p: sympy.Poly) -> list[int]:
    return _trim([int(c) for c in reversed(p.all_coeffs())])


def _reduce_series(numerator: Sequence[int], denominator: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    num = _trim(list(numerator))
    if not num:
        return (), ()
    counts: dict[int, int] = {}
    for d in denominator:
        for e in sympy.divisors(d):
            counts[e] = counts.get(e, 0) + 1
    p = _to_sympy(num)
    for e in sorted(counts):
        psi = _psi(e)
        while counts[e]:
            q, r = p.div(psi)
            if not r.is_zero:
                break
            p = q
            counts[e] -= 1
    depth = max(counts.values(), default=0)
    new_den: list[int] = []
    for j in range(1, depth + 1):
        active = [e for e, k in counts.items() if k >= j]
        big = math.lcm(*active)
        new_den.append(big)
        for e in sympy.divisors(big):
            if counts.get(e, 0) < j:
                p = p * _psi(e)
    return tuple(_from_sympy(p)), tuple(sorted(new_den))


@dataclass(frozen=True, eq=False)
class HilbertSeries:
    """numerator(t) / prod(1 - t^d for d in denominator), kept in reduced form."""

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    @classmethod
    def build(cls, numerator: Sequence[int], denominator: Sequence[int]) -> "HilbertSeries":
        if any(d <= 0 for d in denominator):
            raise ValueError("denominator degrees must be positive")
        num, den = _reduce_series(numerator, denominator)
        return cls(num, den)

    @classmethod
    def zero(cls) -> "HilbertSeries":
        return cls((), ())

    def is_zero(self) -> bool:
        return not self.numerator

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        left = list(self.numerator)
        for d in other.denominator:
            left = _poly_mul(left, _one_minus(d))
        right = list(other.numerator)
        for d in self.denominator:
            right = _poly_mul(right, _one_minus(d))
        return left == right

    def __hash__(self) -> int:
        return hash((self.numerator, self.denominator))

    @property
    def pole_order(self) -> int:
        """Order of the pole at t = 1."""
        if self.is_zero():
            return 0
        p = _to_sympy(self.numerator)
        vanishing = 0
        while p.eval(1) == 0:
            p = p.div(_psi(1))[0]
            vanishing += 1
        return len(self.denominator) - vanishing

    def coefficients(self, upto: int) -> list[int]:
        """Dimensions of the graded pieces in degrees 0..upto."""
        series = [0] * (upto + 1)
        for i, c in enumerate(self.numerator[: upto + 1]):
            series[i] = c
        for d in self.denominator:
            for k in range(d, upto + 1):
                series[k] += series[k - d]
        return series

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        num = _format_int_poly(self.numerator)
        if not self.denominator:
            return num
        groups: dict[int, int] = {}
        for d in self.denominator:
            groups[d] = groups.get(d, 0) + 1
        factors = []
        for d, k in sorted(groups.items()):
            base = "(1 - t)" if d == 1 else f"(1 - t^{d})"
            factors.append(base if k == 1 else f"{base}^{k}")
        if len(self.numerator) > 1 and any(self.numerator[1:]):
            num = f"({num})"
        return f"{num}/" + "*".join(factors) if len(factors) == 1 else f"{num}/({'*'.join(factors)})"

    def to_json(self) -> dict:
        return {
            "numerator": [str(c) for c in self.numerator],
            "denominator": [str(d) for d in self.denominator],
            "pole_order": str(self.pole_order),
            "text": self.to_text(),
        }


def _format_int_poly(coeffs: Sequence[int]) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        parts.append(("-" if c < 0 else "+", body))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def _kpoly(gens: tuple[ExpVec, ...], degrees: tuple[int, ...], memo: dict) -> list[int]:
    if gens in memo:
        return memo[gens]
    if not gens:
        result = [1]
    elif any(not any(g) for g in gens):
        result = []
    else:
        branch = None
        for g in gens:
            if sum(g) > 1:
                idx = next(i for i, e in enumerate(g) if e)
                branch = idx if branch is None else min(branch, idx)
        if branch is None:
            result = [1]
            for g in gens:
                idx = next(i for i, e in enumerate(g) if e)
                result = _poly_mul(result, _one_minus(degrees[idx]))
        else:
            unit = tuple(1 if i == branch else 0 for i in range(len(degrees)))
            plus = minimalize(list(gens) + [unit])
            colon = minimalize(
                tuple(e - 1 if i == branch and e else e for i, e in enumerate(g)) for g in gens
            )
            shifted = [0] * degrees[branch] + _kpoly(colon, degrees, memo)
            result = _poly_add(_kpoly(plus, degrees, memo), _trim(shifted))
    memo[gens] = result
    return result


def hilbert_monomial(ideal: MonomialIdeal, degrees: Sequence[int]) -> HilbertSeries:
    """Hilbert series of R[X]/I under deg(X_i) = degrees[i]."""
    degrees = tuple(degrees)
    if len(degrees) != ideal.nvars or any(d < 1 for d in degrees):
        raise ValueError("need one positive degree per variable")
    numerator = _kpoly(minimalize(ideal.generators), degrees, {})
    return HilbertSeries.build(numerator, degrees)


def hilbert_homogeneous(gens: Sequence[Poly], degrees: Sequence[int], order) -> HilbertSeries:
    gens = [g for g in gens if g]
    for g in gens:
        if not g.is_homogeneous(degrees):
            raise NonHomogeneousInput(f"generator {g.to_text()} is not homogeneous")
    nvars = len(degrees)
    G = ord_buchberger(gens, order) if gens else []
    ideal = MonomialIdeal.from_generators(nvars, [g.leading_term(order)[1] for g in G])
    return hilbert_monomial(ideal, degrees)


def krull_dimension(h: HilbertSeries) -> int:
    return h.pole_order
