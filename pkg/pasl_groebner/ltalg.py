"""Algebras of leading terms.

An algebra of leading terms shares the standard monomials of its base
pseudo-ASL, but multiplies them by keeping only the leading term of the base
product (gen), by adding exponent vectors and killing anything in Sigma (disc),
or like gen with an extra set of pairs forced to zero (custom).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import config
from .bidet import BideterminantAlgebra, BitableauOrder, Bitableau, lcm_bitableaux, lt_quotient
from .errors import DegreeMismatch, IncompatiblePair, InternalConsistencyError, InvalidAlgebra, NoFinitePresentation
from .pasl import PaslAlgebra, PaslTermOrder, RuleAlgebra, ValidationReport, validate_term_order
from .polyring import (
    ExpVec,
    OrdTermOrder,
    Poly,
    colon_ideal,
    divides,
    exp_add,
    exp_lcm,
    exp_sub,
    ideal_intersection,
)
from .utils import progress

log = logging.getLogger(__name__)

Term = tuple[Fraction, ExpVec]


@dataclass(frozen=True)
class LtKind:
    name: str
    zero_pairs: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.name not in ("gen", "disc", "custom"):
            raise InvalidAlgebra(f"unknown algebra of leading terms {self.name!r}")

    @classmethod
    def gen(cls) -> "LtKind":
        return cls("gen")

    @classmethod
    def disc(cls) -> "LtKind":
        return cls("disc")

    @classmethod
    def custom(cls, pairs: Iterable[tuple[Sequence[int], Sequence[int]]]) -> "LtKind":
        return cls("custom", frozenset(_pair_key(tuple(a), tuple(b)) for a, b in pairs))


def _pair_key(a: ExpVec, b: ExpVec) -> tuple[ExpVec, ExpVec]:
    return (a, b) if a <= b else (b, a)


class LtAlgebra:
    def __init__(self, base: PaslAlgebra, order: PaslTermOrder, kind: LtKind | None = None):
        self.base = base
        self.order = order
        self.kind = kind or LtKind.gen()
        for a, b in self.kind.zero_pairs:
            for e in (a, b):
                if len(e) != base.nvars or not base.is_standard(e):
                    raise InvalidAlgebra(f"zero pair entry {list(e)} is not a standard monomial")
        self._products: dict[tuple[ExpVec, ExpVec], Optional[Term]] = {}
        self._multiples: dict[tuple[ExpVec, int], dict[ExpVec, tuple[Fraction, ExpVec]]] = {}
        self._presentation: Optional[list[Poly]] = None
        self._evaluated: dict[ExpVec, Optional[Term]] = {}

    @property
    def name(self) -> str:
        return self.kind.name

    @property
    def nvars(self) -> int:
        return self.base.nvars

    def is_bidet_closed_form(self) -> bool:
        return isinstance(self.base, BideterminantAlgebra) and isinstance(self.order, BitableauOrder)

    # -- multiplication ----------------------------------------------------
    def lt_multiply(self, a: ExpVec, b: ExpVec) -> Optional[Term]:
        """pi(a) * pi(b) as a term, or None for zero."""
        key = _pair_key(tuple(a), tuple(b))
        if key in self._products:
            return self._products[key]
        if self.kind.name == "disc":
            s = exp_add(a, b)
            result: Optional[Term] = (Fraction(1), s) if self.base.is_standard(s) else None
        elif self.kind.name == "custom" and key in self.kind.zero_pairs:
            result = None
        else:
            result = self.base.leading_product(self.order, a, b)
        self._products[key] = result
        return result

    def multiply_terms(self, t1: Term, t2: Term) -> Optional[Term]:
        r = self.lt_multiply(t1[1], t2[1])
        if r is None:
            return None
        return t1[0] * t2[0] * r[0], r[1]

    def lt_multiples(self, den: ExpVec, degree: int) -> dict[ExpVec, tuple[Fraction, ExpVec]]:
        """product monomial -> (coefficient, quotient) over standard quotients of one degree."""
        key = (tuple(den), degree)
        hit = self._multiples.get(key)
        if hit is not None:
            return hit
        out: dict[ExpVec, tuple[Fraction, ExpVec]] = {}
        for s in self.base.enumerate_standard(degree):
            r = self.lt_multiply(den, s)
            if r is None:
                continue
            if r[1] in out:
                raise InternalConsistencyError(
                    f"{self.base.format_monomial(out[r[1]][1])} and {self.base.format_monomial(s)} "
                    f"give the same leading term times {self.base.format_monomial(den)}; the order is not a term order"
                )
            out[r[1]] = (r[0], s)
        self._multiples[key] = out
        return out

    # -- division ----------------------------------------------------------
    def try_divide(self, num: ExpVec, den: ExpVec) -> Optional[Term]:
        """(c, t) with pi(den) * c*pi(t) == pi(num), or None."""
        num, den = tuple(num), tuple(den)
        dn, dd = self.base.degree(num), self.base.degree(den)
        if dd > dn:
            return None
        if self.kind.name == "disc":
            if not divides(den, num):
                return None
            return Fraction(1), exp_sub(num, den)
        if self.is_bidet_closed_form():
            q = lt_quotient(self.base.bitableau(num), self.base.bitableau(den))
            if q is None:
                return None
            t = self.base.exponent(q)
            if self.kind.name == "custom" and self.lt_multiply(den, t) is None:
                return None
            return Fraction(1), t
        hit = self.lt_multiples(den, dn - dd).get(num)
        if hit is None:
            return None
        coeff, t = hit
        return 1 / coeff, t

    def lt_divide(self, num: ExpVec, den: ExpVec) -> Optional[Term]:
        if self.base.degree(den) > self.base.degree(num):
            raise DegreeMismatch(
                f"{self.base.format_monomial(den)} has larger degree than {self.base.format_monomial(num)}"
            )
        return self.try_divide(num, den)

    def divides(self, den: ExpVec, num: ExpVec) -> bool:
        return self.try_divide(num, den) is not None

    def minimalize(self, monos: Iterable[ExpVec]) -> list[ExpVec]:
        """Division-minimal elements, in increasing order."""
        uniq = sorted(set(tuple(m) for m in monos), key=lambda e: (self.base.degree(e), self.order.key(e)))
        keep: list[ExpVec] = []
        for m in uniq:
            if not any(self.divides(k, m) for k in keep):
                keep.append(m)
        return sorted(keep, key=self.order.key)

    # -- presentation of the gen algebra ---------------------------------------
    def presentation(self) -> list[Poly]:
        """Generators of K with R[H]/K the gen algebra: Sigma binomials truncated to leading terms."""
        if self._presentation is None:
            if self.kind.name != "gen":
                raise NoFinitePresentation(f"no polynomial presentation is built for the {self.name} algebra")
            rels = []
            for sigma in self.base.sigma:
                terms = {sigma: Fraction(1)}
                expansion = self.base.straighten_exp(sigma)
                if expansion:
                    lm = max(expansion, key=self.order.key)
                    terms[lm] = terms.get(lm, 0) - expansion[lm]
                rels.append(Poly(self.nvars, terms))
            self._presentation = rels
        return self._presentation

    def evaluate(self, exp: ExpVec) -> Optional[Term]:
        """The product of generators x^exp computed in this algebra."""
        exp = tuple(exp)
        if exp in self._evaluated:
            return self._evaluated[exp]
        if not any(exp):
            result: Optional[Term] = (Fraction(1), exp)
        else:
            i = max(k for k, e in enumerate(exp) if e)
            unit = tuple(1 if k == i else 0 for k in range(self.nvars))
            rest = self.evaluate(exp_sub(exp, unit))
            result = None if rest is None else self.multiply_terms(rest, (Fraction(1), unit))
        self._evaluated[exp] = result
        return result

    def _monomials_of(self, polys: Iterable[Poly]) -> set[ExpVec]:
        found: set[ExpVec] = set()
        for h in polys:
            acc: dict[ExpVec, Fraction] = {}
            for e, c in h.terms.items():
                t = self.evaluate(e)
                if t is not None:
                    acc[t[1]] = acc.get(t[1], 0) + c * t[0]
            found.update(e for e, c in acc.items() if c)
        return found

    def _ring_order(self) -> OrdTermOrder:
        return OrdTermOrder.degrevlex(self.nvars, self.base.degrees)

    def _use_presentation(self) -> bool:
        mode = config.LCM_MODE
        if mode == "presentation":
            if self.kind.name != "gen":
                raise NoFinitePresentation(f"the presentation route needs the gen algebra, not {self.name}")
            return True
        if mode == "enumerate":
            return False
        return self.kind.name == "gen" and isinstance(self.base, RuleAlgebra)

    # -- LCM sets and annihilators -------------------------------------------
    def lcm_set(self, a: ExpVec, b: ExpVec) -> list[ExpVec]:
        a, b = tuple(a), tuple(b)
        if self.kind.name == "disc":
            l = exp_lcm(a, b)
            return [l] if self.base.is_standard(l) else []
        if self.is_bidet_closed_form():
            alg = self.base
            check = None
            if self.kind.name == "custom":
                def check(den: Bitableau, num: Bitableau) -> bool:
                    return self.divides(alg.exponent(den), alg.exponent(num))
            found = lcm_bitableaux(alg.bitableau(a), alg.bitableau(b), alg.n, alg.m, check)
            return sorted((alg.exponent(t) for t in found), key=self.order.key)
        if self._use_presentation():
            return self._lcm_presentation(a, b)
        return self._lcm_enumerate(a, b)

    def _lcm_presentation(self, a: ExpVec, b: ExpVec) -> list[ExpVec]:
        K = self.presentation()
        ring = self._ring_order()
        left = K + [Poly(self.nvars, {a: 1})]
        right = K + [Poly(self.nvars, {b: 1})]
        inter = ideal_intersection(left, right, ring)
        monos = [m for m in self._monomials_of(inter) if self.divides(a, m) and self.divides(b, m)]
        result = self.minimalize(monos)
        log.debug("[lcm] presentation route: %d generators, %d minimal", len(inter), len(result))
        return result

    def _lcm_enumerate(self, a: ExpVec, b: ExpVec) -> list[ExpVec]:
        lo = max(self.base.degree(a), self.base.degree(b))
        hi = self.base.degree(a) + self.base.degree(b) + config.LCM_DEGREE_SLACK
        common: list[ExpVec] = []
        for d in progress(range(lo, hi + 1), desc="lcm", total=hi - lo + 1):
            for s in self.base.enumerate_standard(d):
                if self.divides(a, s) and self.divides(b, s):
                    common.append(s)
        return self.minimalize(common)

    def lam(self, m: ExpVec) -> list[ExpVec]:
        """Least annihilating monomials of pi(m)."""
        m = tuple(m)
        if self.kind.name == "disc":
            cands = []
            for g in self.base.sigma:
                c = tuple(max(x - y, 0) for x, y in zip(g, m))
                if self.base.is_standard(c):
                    cands.append(c)
            return self.minimalize(cands)
        if self.kind.name == "gen" and self.base.is_domain():
            return []
        if self.kind.name == "gen" and self._use_presentation():
            K = self.presentation()
            col = colon_ideal(K, Poly(self.nvars, {m: 1}), self._ring_order())
            monos = [s for s in self._monomials_of(col) if self.lt_multiply(s, m) is None]
            return self.minimalize(monos)
        return self._lam_enumerate(m)

    def _lam_enumerate(self, m: ExpVec) -> list[ExpVec]:
        bound = max((self.base.degree(s) for s in self.base.sigma), default=0)
        for a, b in self.kind.zero_pairs:
            bound = max(bound, self.base.degree(a), self.base.degree(b))
        bound += config.LCM_DEGREE_SLACK
        found: list[ExpVec] = []
        for d in range(1, bound + 1):
            for s in self.base.enumerate_standard(d):
                if self.lt_multiply(s, m) is None:
                    found.append(s)
        return self.minimalize(found)

    def colon_ann(self, g_lt: ExpVec, m: ExpVec) -> list[ExpVec]:
        """Minimal generators of (Ann(g_lt) : m) = Ann(m * g_lt)."""
        r = self.lt_multiply(m, g_lt)
        if r is None:
            raise IncompatiblePair(
                f"{self.base.format_monomial(m)} * {self.base.format_monomial(g_lt)} is already zero"
            )
        return self.lam(r[1])

    def compatible(self, f: Poly, g: Poly) -> bool:
        return all(self.lt_multiply(a, b) is not None for a in f.terms for b in g.terms)

    # -- checks ---------------------------------------------------------------
    def validate_order(self, max_degree: int) -> ValidationReport:
        def product_lm(a: ExpVec, b: ExpVec) -> Optional[ExpVec]:
            r = self.lt_multiply(a, b)
            return None if r is None else r[1]

        return validate_term_order(self.base, self.order, max_degree, product_lm)

    def check_associative(self, max_degree: int) -> Optional[tuple[ExpVec, ExpVec, ExpVec]]:
        """First triple (a, b, c) up to total degree max_degree where (ab)c and a(bc) differ."""
        monos = [s for s in self.base.standard_upto(max_degree) if any(s)]
        for i, a in enumerate(monos):
            for j in range(i, len(monos)):
                b = monos[j]
                for c in monos[j:]:
                    if self.base.degree(a) + self.base.degree(b) + self.base.degree(c) > max_degree:
                        continue
                    ab, bc = self.lt_multiply(a, b), self.lt_multiply(b, c)
                    left = None if ab is None else self.multiply_terms(ab, (Fraction(1), c))
                    right = None if bc is None else self.multiply_terms((Fraction(1), a), bc)
                    if left != right:
                        return a, b, c
        return None

    def to_json(self) -> dict:
        doc: dict = {"kind": self.name}
        if self.kind.zero_pairs:
            doc["zero_pairs"] = [[list(a), list(b)] for a, b in sorted(self.kind.zero_pairs)]
        return doc
