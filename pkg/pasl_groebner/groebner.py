"""Gröbner bases over pseudo-ASLs relative to an algebra of leading terms.

Reduction is by lt-division: a term c*t of f is reducible by g when t is a
multiple of LT(g) in the algebra of leading terms. A basis is built by
alternating S-closure (S-polynomials over every least common multiple of two
leading terms) with Ann-closure (products of basis elements with the monomials
that kill their leading terms), until neither adds anything.
"""
from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from . import config
from .errors import InternalConsistencyError, NonHomogeneousInput, UnsupportedZeroDivisorLeadingTerm
from .ltalg import LtAlgebra, LtKind
from .pasl import PaslAlgebra, PaslElement, PaslTermOrder, leading_term, validate_term_order
from .polyring import ExpVec, MonomialIdeal, Poly, hilbert_monomial

log = logging.getLogger(__name__)


@dataclass
class StdExpression:
    """f = remainder + sum(cofactors[i] * G[i])."""

    remainder: PaslElement
    cofactors: dict[int, PaslElement] = field(default_factory=dict)

    def reduces_to_zero(self) -> bool:
        return not self.remainder


@dataclass(frozen=True)
class CompatibilitySyzygy:
    """s * G[index] == sum(cofactors[k] * G[k]) for the basis at the time it was found."""

    monomial: ExpVec
    index: int
    cofactors: dict[int, PaslElement]


@dataclass
class GroebnerBasis:
    elements: list[PaslElement]
    alt: LtAlgebra
    reduced: bool = False

    @property
    def algebra(self) -> PaslAlgebra:
        return self.alt.base

    @property
    def order(self) -> PaslTermOrder:
        return self.alt.order

    @property
    def kind(self) -> LtKind:
        return self.alt.kind

    def leading_monomials(self) -> list[ExpVec]:
        return [leading_term(self.order, g)[1] for g in self.elements]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[PaslElement]:
        return iter(self.elements)


def _as_element(alg: PaslAlgebra, f: Poly) -> PaslElement:
    return f if isinstance(f, PaslElement) else PaslElement(alg.nvars, f.terms)


def _nonzero(gens: Iterable[Poly], alg: PaslAlgebra) -> list[PaslElement]:
    return [_as_element(alg, g) for g in gens if g]


# --------------------------------------------------------------------------
# Standard expressions
# --------------------------------------------------------------------------


def standard_expression(alt: LtAlgebra, f: Poly, G: Sequence[Poly]) -> StdExpression:
    """Divide f by G, greatest remaining term first, first lt-divisor in list order."""
    alg, order = alt.base, alt.order
    leads = [leading_term(order, g) for g in G]
    p: dict[ExpVec, Fraction] = dict(f.terms)
    rem: dict[ExpVec, Fraction] = {}
    cof: dict[int, dict[ExpVec, Fraction]] = {}
    while p:
        t = max(p, key=order.key)
        c = p[t]
        for i, (lc, lm) in enumerate(leads):
            hit = alt.try_divide(t, lm)
            if hit is None:
                continue
            k, q = hit
            coef = c * k / lc
            product = alg.multiply_term(q, coef, G[i])
            if not product or max(product.terms, key=order.key) != t or product.terms[t] != c:
                raise InternalConsistencyError(
                    f"{alg.format_monomial(q)} * LT(g{i + 1}) does not lead with {alg.format_monomial(t)}; "
                    f"the order {order.name} is not valid for this algebra"
                )
            for e, v in product.terms.items():
                val = p.get(e, 0) - v
                if val:
                    p[e] = val
                else:
                    p.pop(e, None)
            slot = cof.setdefault(i, {})
            slot[q] = slot.get(q, 0) + coef
            break
        else:
            rem[t] = c
            del p[t]
    cofactors = {i: PaslElement(alg.nvars, terms) for i, terms in cof.items()}
    return StdExpression(PaslElement(alg.nvars, rem), {i: h for i, h in cofactors.items() if h})


def remainder(alt: LtAlgebra, f: Poly, G: Sequence[Poly]) -> PaslElement:
    return standard_expression(alt, f, G).remainder


# --------------------------------------------------------------------------
# S-sets and S-closure
# --------------------------------------------------------------------------


def _s_polynomial(alt: LtAlgebra, f: Poly, g: Poly, l: ExpVec) -> PaslElement:
    alg = alt.base
    lcf, lmf = leading_term(alt.order, f)
    lcg, lmg = leading_term(alt.order, g)
    left, right = alt.try_divide(l, lmf), alt.try_divide(l, lmg)
    if left is None or right is None:
        raise InternalConsistencyError(f"{alg.format_monomial(l)} is not a common multiple of the leading terms")
    k1, q1 = left
    k2, q2 = right
    return alg.multiply_term(q1, k1 / lcf, f) - alg.multiply_term(q2, k2 / lcg, g)


def s_set(alt: LtAlgebra, f: Poly, g: Poly) -> list[PaslElement]:
    """One S-polynomial per least common multiple of LT(f) and LT(g)."""
    if f == g:
        return [alt.base.zero()]
    lmf = leading_term(alt.order, f)[1]
    lmg = leading_term(alt.order, g)[1]
    return [_s_polynomial(alt, f, g, l) for l in alt.lcm_set(lmf, lmg)]


def s_closure(alt: LtAlgebra, gens: Iterable[Poly]) -> list[PaslElement]:
    alg = alt.base
    G = _nonzero(gens, alg)
    leads = [leading_term(alt.order, g)[1] for g in G]
    heap: list[tuple[int, int, int, ExpVec]] = []

    def push_pairs(new: int) -> None:
        for i in range(new):
            for l in alt.lcm_set(leads[i], leads[new]):
                heapq.heappush(heap, (alg.degree(l), i, new, l))

    for j in range(1, len(G)):
        push_pairs(j)
    reduced = 0
    while heap:
        _, i, j, l = heapq.heappop(heap)
        r = remainder(alt, _s_polynomial(alt, G[i], G[j], l), G)
        reduced += 1
        if r:
            G.append(r)
            leads.append(leading_term(alt.order, r)[1])
            log.debug("[sclosure] pair (%d, %d) adds %s", i + 1, j + 1, r.to_text(alg.names))
            push_pairs(len(G) - 1)
    log.debug("[sclosure] %d S-polynomials reduced, %d elements", reduced, len(G))
    return G


def is_s_closed(alt: LtAlgebra, G: Sequence[Poly]) -> bool:
    G = list(G)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            if any(remainder(alt, s, G) for s in s_set(alt, G[i], G[j])):
                return False
    return True


# --------------------------------------------------------------------------
# Ann-closure
# --------------------------------------------------------------------------


def _follow_ups(alt: LtAlgebra, G: Sequence[Poly], cofactors: dict[int, PaslElement]) -> Iterator[tuple[ExpVec, int]]:
    """(LM(t*m), k) for m in cofactor k and t in LAM(pi(m * LT(G[k])))."""
    for k, h in cofactors.items():
        lm = leading_term(alt.order, G[k])[1]
        for m in h.terms:
            prod = alt.lt_multiply(m, lm)
            if prod is None:
                continue
            for t in alt.lam(prod[1]):
                lt = alt.base.leading_product(alt.order, t, m)
                if lt is not None:
                    yield lt[1], k


def ann_queue(alt: LtAlgebra, G: list[PaslElement], gens: Sequence[PaslElement], extend: bool,
               max_degree: int | None = None,
               use_oracle: bool = True) -> Iterator[tuple[CompatibilitySyzygy, PaslElement]]:
    """Drive the annihilator queue over G, yielding each syzygy and its remainder.

    Pairs are taken lowest product degree first. With `extend`, nonzero
    remainders are appended to G and become part of the yielded syzygy. Stops
    when the queue drains or, every ORACLE_INTERVAL steps, when the
    Hilbert-series oracle reports G closed. Follow-up pairs above `max_degree`
    are dropped; direct annihilator pairs never are.
    """
    alg = alt.base
    queue: list[tuple[int, int, ExpVec, int]] = []
    seen: set[tuple[ExpVec, int]] = set()

    def enqueue(s: ExpVec, k: int, direct: bool = False) -> None:
        if (s, k) in seen:
            return
        deg = alg.degree(s) + alg.degree(leading_term(alt.order, G[k])[1])
        if not direct and max_degree is not None and deg > max_degree:
            return
        seen.add((s, k))
        heapq.heappush(queue, (deg, len(seen), s, k))

    def seed(k: int) -> None:
        for s in alt.lam(leading_term(alt.order, G[k])[1]):
            enqueue(s, k, direct=True)

    for k in range(len(G)):
        seed(k)
    steps = 0
    while queue:
        _, _, s, k = heapq.heappop(queue)
        expr = standard_expression(alt, alg.multiply_term(s, Fraction(1), G[k]), G)
        cof = dict(expr.cofactors)
        r = expr.remainder
        if r and extend:
            G.append(r)
            cof[len(G) - 1] = alg.one()
            log.debug("[ann] %s * g%d adds %s", alg.format_monomial(s), k + 1, r.to_text(alg.names))
            seed(len(G) - 1)
        yield CompatibilitySyzygy(s, k, cof), r
        for pair in _follow_ups(alt, G, cof):
            enqueue(*pair)
        steps += 1
        if use_oracle and config.ANN_ORACLE and steps % config.ORACLE_INTERVAL == 0 and queue:
            if is_ann_closed(alt, gens, G):
                log.info("[ann] oracle reports closure after %d steps, %d still queued", steps, len(queue))
                return
    log.debug("[ann] queue drained after %d steps", steps)


def ann_closure(alt: LtAlgebra, gens: Iterable[Poly]) -> tuple[list[PaslElement], list[CompatibilitySyzygy]]:
    G = _nonzero(gens, alt.base)
    original = list(G)
    syzygies = [syz for syz, _ in ann_queue(alt, G, original, extend=True)]
    return G, syzygies


def is_ann_closed(alt: LtAlgebra, gens: Sequence[Poly], G: Sequence[Poly]) -> bool:
    """Compare the leading-term count of G with the quotient by <gens>.

    Exact on the disc algebra (Hilbert series in the polynomial ring on H);
    otherwise degree by degree up to ORACLE_DEGREE.
    """
    alg = alt.base
    gens = _nonzero(gens, alg)
    G = _nonzero(G, alg)
    if not alt.order.graded or not all(g.is_homogeneous(alg.degrees) for g in gens):
        log.debug("[oracle] input is not graded; closure cannot be certified")
        return False
    leads = [leading_term(alt.order, g)[1] for g in G]
    if alt.name == "disc":
        try:
            full = alg.quotient_series(gens)
        except NonHomogeneousInput:
            return False
        initial = hilbert_monomial(MonomialIdeal.from_generators(alg.nvars, list(alg.sigma) + leads), alg.degrees)
        return full == initial
    log.warning("[oracle] %s closure is only checked up to degree %d (PASL_ORACLE_DEGREE)", alt.name, config.ORACLE_DEGREE)
    for d in range(config.ORACLE_DEGREE + 1):
        outside = sum(1 for s in alg.enumerate_standard(d) if not any(alt.divides(lm, s) for lm in leads))
        if outside != quotient_dimension(alg, gens, d):
            return False
    return True


def quotient_dimension(alg: PaslAlgebra, gens: Sequence[Poly], degree: int) -> int:
    """dim (A / <gens>) in one degree, by rank of the spanning products."""
    basis = alg.enumerate_standard(degree)
    if not basis:
        return 0
    column = {e: i for i, e in enumerate(basis)}
    rows: list[list] = []
    for g in gens:
        if not g:
            continue
        if not g.is_homogeneous(alg.degrees):
            raise NonHomogeneousInput(f"{g.to_text(alg.names)} is not homogeneous")
        dg = alg.degree(next(iter(g.terms)))
        for m in alg.enumerate_standard(degree - dg):
            row = [QQ(0)] * len(basis)
            for e, c in alg.multiply_term(m, Fraction(1), g).terms.items():
                row[column[e]] = QQ(c.numerator, c.denominator)
            rows.append(row)
    if not rows:
        return len(basis)
    rank = DomainMatrix(rows, (len(rows), len(basis)), QQ).rank()
    return len(basis) - rank


# --------------------------------------------------------------------------
# Full bases
# --------------------------------------------------------------------------


def reduce_basis(alt: LtAlgebra, G: Sequence[Poly]) -> list[PaslElement]:
    """Drop redundant elements, reduce every tail, make leading coefficients 1."""
    alg, order = alt.base, alt.order
    basis = _nonzero(G, alg)
    leads = [leading_term(order, g)[1] for g in basis]
    keep: list[PaslElement] = []
    for i, g in enumerate(basis):
        redundant = any(
            j != i and alt.divides(other, leads[i]) and (other != leads[i] or j < i)
            for j, other in enumerate(leads)
        )
        if not redundant:
            keep.append(g)
    out = []
    for i, g in enumerate(keep):
        r = remainder(alt, g, keep[:i] + keep[i + 1:])
        lc, _ = leading_term(order, r)
        out.append(_as_element(alg, r.scale(1 / lc)))
    out.sort(key=lambda f: order.key(leading_term(order, f)[1]))
    return out


def pasl_groebner(alt: LtAlgebra, gens: Iterable[Poly], reduced: bool = False) -> GroebnerBasis:
    alg = alt.base
    G = _nonzero(gens, alg)
    rounds = 0
    while True:
        rounds += 1
        before = len(G)
        G = s_closure(alt, G)
        G, _ = ann_closure(alt, G)
        log.debug("[gb] round %d: %d -> %d elements", rounds, before, len(G))
        if len(G) == before:
            break
    if reduced:
        G = reduce_basis(alt, G)
    log.info("[gb] %s/%s basis with %d elements after %d rounds", alt.order.name, alt.name, len(G), rounds)
    return GroebnerBasis(G, alt, reduced)


def membership(gb: GroebnerBasis, f: Poly) -> bool:
    if not f:
        return True
    return not remainder(gb.alt, f, gb.elements)


def macaulay_basis(gb: GroebnerBasis, degree: int) -> list[ExpVec]:
    """Standard monomials of one degree outside the leading ideal, greatest first."""
    leads = gb.leading_monomials()
    alt = gb.alt
    found = [s for s in alt.base.enumerate_standard(degree) if not any(alt.divides(lm, s) for lm in leads)]
    return sorted(found, key=alt.order.key, reverse=True)


# --------------------------------------------------------------------------
# Verification
# --------------------------------------------------------------------------


def _has_zerodivisor_lead(alt: LtAlgebra, G: Sequence[Poly]) -> Optional[ExpVec]:
    for g in G:
        lm = leading_term(alt.order, g)[1]
        if alt.base.is_zerodivisor(lm):
            return lm
    return None


def verify_gb(alt: LtAlgebra, gens: Iterable[Poly], candidate: Iterable[Poly],
              check_containment: bool = True) -> bool:
    """True iff candidate generates <gens> and is S-closed and Ann-closed."""
    alg = alt.base
    gens = _nonzero(gens, alg)
    cand = _nonzero(candidate, alg)
    if any(remainder(alt, g, cand) for g in gens):
        log.info("[verify] a generator does not reduce to 0 over the candidate")
        return False
    if check_containment:
        trusted = pasl_groebner(alt, gens)
        if not all(membership(trusted, c) for c in cand):
            log.info("[verify] the candidate is not contained in the ideal")
            return False
    zd = _has_zerodivisor_lead(alt, cand)
    if zd is not None:
        if not config.ANN_ORACLE:
            raise UnsupportedZeroDivisorLeadingTerm(
                f"leading term {alg.format_monomial(zd)} is a zerodivisor; enable PASL_ANN_ORACLE to verify"
            )
        log.info("[verify] zerodivisor leading term %s, using the Hilbert-series oracle", alg.format_monomial(zd))
        return is_ann_closed(alt, gens, cand)
    if not is_s_closed(alt, cand):
        log.info("[verify] candidate is not S-closed")
        return False
    for syz, r in ann_queue(alt, list(cand), gens, extend=False):
        if r:
            log.info("[verify] %s * g%d leaves remainder %s",
                     alg.format_monomial(syz.monomial), syz.index + 1, r.to_text(alg.names))
            return False
    return True


@dataclass
class UniversalReport:
    rows: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r["status"] == "pass" for r in self.rows)

    def to_json(self) -> dict:
        return {"ok": self.ok, "checks": self.rows}


def universal_check(alg: PaslAlgebra, gens: Sequence[Poly], candidate: Sequence[Poly],
                    orders: Sequence[PaslTermOrder], kinds: Sequence[LtKind],
                    max_degree: int | None = None) -> UniversalReport:
    """verify_gb over every (order, algebra of leading terms) combination."""
    degree = max_degree if max_degree is not None else config.VALIDATE_DEGREE
    report = UniversalReport()
    for order in orders:
        validation = validate_term_order(alg, order, degree)
        for kind in kinds:
            row = {"order": order.name, "alt": kind.name}
            if not validation.ok:
                row["status"] = "order-invalid"
                row["violation"] = validation.violation
            else:
                try:
                    passed = verify_gb(LtAlgebra(alg, order, kind), gens, candidate)
                    row["status"] = "pass" if passed else "fail"
                except UnsupportedZeroDivisorLeadingTerm as exc:
                    row["status"] = "unsupported"
                    row["detail"] = str(exc)
            log.info("[universal] %s/%s: %s", row["order"], row["alt"], row["status"])
            report.rows.append(row)
    return report
