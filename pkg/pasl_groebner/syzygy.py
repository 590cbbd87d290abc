"""Syzygies of a pseudo-ASL Gröbner basis.

For a basis f_1..f_d the map A^d -> A sends e_i to f_i. Its kernel is
generated by S-remainder syzygies (tau, one per pair and least common multiple)
and compatibility syzygies (beta, one per annihilating monomial). Under a good
module order these form a Gröbner basis of the kernel whose leading terms are
the divided Koszul syzygies and the annihilator syzygies of the leading terms.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping, Optional, Sequence

from .errors import InternalConsistencyError, ZeroDivisorLeadingTerm
from .groebner import GroebnerBasis, ann_queue, standard_expression
from .ltalg import LtAlgebra
from .pasl import PaslAlgebra, PaslElement, PaslTermOrder, ValidationReport, leading_term
from .polyring import ExpVec, Poly
from .utils import terms_to_json

log = logging.getLogger(__name__)

ModMonomial = tuple[int, ExpVec]


class ModElement:
    """Element of A^d as index -> nonzero component."""

    __slots__ = ("rank", "nvars", "_components")

    def __init__(self, rank: int, nvars: int, components: Mapping[int, Poly] | None = None):
        self.rank = rank
        self.nvars = nvars
        clean: dict[int, PaslElement] = {}
        for i, f in (components or {}).items():
            if not 0 <= i < rank:
                raise IndexError(f"basis index {i + 1} is outside 1..{rank}")
            if f:
                clean[i] = f if isinstance(f, PaslElement) else PaslElement(nvars, f.terms)
        self._components = clean

    @classmethod
    def term(cls, rank: int, nvars: int, index: int, exp: ExpVec, c: Fraction | int = 1) -> "ModElement":
        return cls(rank, nvars, {index: PaslElement(nvars, {exp: c})})

    def component(self, i: int) -> PaslElement:
        return self._components.get(i, PaslElement.zero(self.nvars))

    @property
    def components(self) -> dict[int, PaslElement]:
        return dict(self._components)

    def terms(self) -> Iterator[tuple[ModMonomial, Fraction]]:
        for i, f in sorted(self._components.items()):
            for e, c in f.terms.items():
                yield (i, e), c

    def is_zero(self) -> bool:
        return not self._components

    def __bool__(self) -> bool:
        return bool(self._components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModElement):
            return NotImplemented
        return self.rank == other.rank and self._components == other._components

    def __hash__(self) -> int:
        return hash((self.rank, frozenset(self._components.items())))

    def __add__(self, other: "ModElement") -> "ModElement":
        out = dict(self._components)
        for i, f in other._components.items():
            out[i] = out[i] + f if i in out else f
        return ModElement(self.rank, self.nvars, out)

    def __neg__(self) -> "ModElement":
        return ModElement(self.rank, self.nvars, {i: -f for i, f in self._components.items()})

    def __sub__(self, other: "ModElement") -> "ModElement":
        return self + (-other)

    def leading_term(self, order: "GoodOrder") -> tuple[Fraction, ModMonomial]:
        if not self._components:
            raise InternalConsistencyError("the zero module element has no leading term")
        mono, c = max(self.terms(), key=lambda t: order.key(*t[0]))
        return c, mono

    def to_json(self) -> list[dict]:
        return [{"index": i + 1, "element": terms_to_json(f.terms)} for i, f in sorted(self._components.items())]

    def __repr__(self) -> str:
        parts = [f"({f.to_text()})*e{i + 1}" for i, f in sorted(self._components.items())]
        return "ModElement(" + (" + ".join(parts) or "0") + ")"


@dataclass(frozen=True, eq=False)
class GoodOrder:
    """Module order induced by the images f_i.

    m*e_i is compared by LM(m*f_i) under the base order, then by index (a
    smaller index is greater), then by m itself.
    """

    algebra: PaslAlgebra
    order: PaslTermOrder
    images: tuple[PaslElement, ...]
    _leads: tuple[ExpVec, ...] = field(default=(), repr=False)

    def key(self, index: int, exp: ExpVec) -> tuple:
        lt = self.algebra.leading_product(self.order, exp, self._leads[index])
        if lt is None:
            raise ZeroDivisorLeadingTerm(
                f"{self.algebra.format_monomial(exp)} kills the leading term of f{index + 1}"
            )
        return (self.order.key(lt[1]), -index, self.order.key(exp))

    def compare(self, a: ModMonomial, b: ModMonomial) -> int:
        ka, kb = self.key(*a), self.key(*b)
        return (ka > kb) - (ka < kb)


def build_good_order(alg: PaslAlgebra, order: PaslTermOrder, images: Sequence[Poly]) -> GoodOrder:
    leads = []
    for i, f in enumerate(images):
        lm = leading_term(order, f)[1]
        if alg.is_zerodivisor(lm):
            raise ZeroDivisorLeadingTerm(
                f"leading term {alg.format_monomial(lm)} of f{i + 1} is a zerodivisor; no good order is built"
            )
        leads.append(lm)
    elems = tuple(f if isinstance(f, PaslElement) else PaslElement(alg.nvars, f.terms) for f in images)
    return GoodOrder(alg, order, elems, tuple(leads))


def evaluate_syzygy(alg: PaslAlgebra, syz: ModElement, G: Sequence[Poly]) -> PaslElement:
    total = alg.zero()
    for i, h in syz.components.items():
        total = total + alg.multiply(h, G[i])
    return total


def _pair_quotients(alt: LtAlgebra, lmf: ExpVec, lmg: ExpVec, l: ExpVec) -> tuple[tuple, tuple]:
    left, right = alt.try_divide(l, lmf), alt.try_divide(l, lmg)
    if left is None or right is None:
        raise InternalConsistencyError(f"{alt.base.format_monomial(l)} is not a common multiple")
    return left, right


def tau_syzygies(alt: LtAlgebra, gb: GroebnerBasis | Sequence[Poly]) -> list[ModElement]:
    """S-remainder syzygies: the S-polynomial's quotients minus its standard expression."""
    G = list(gb)
    alg, d = alt.base, len(G)
    out = []
    for i in range(d):
        lcf, lmf = leading_term(alt.order, G[i])
        for j in range(i + 1, d):
            lcg, lmg = leading_term(alt.order, G[j])
            for l in alt.lcm_set(lmf, lmg):
                (k1, q1), (k2, q2) = _pair_quotients(alt, lmf, lmg, l)
                a, b = k1 / lcf, k2 / lcg
                s = alg.multiply_term(q1, a, G[i]) - alg.multiply_term(q2, b, G[j])
                expr = standard_expression(alt, s, G)
                if expr.remainder:
                    raise InternalConsistencyError(
                        f"S-polynomial of f{i + 1}, f{j + 1} leaves a remainder; the input is not a Gröbner basis"
                    )
                syz = ModElement(d, alg.nvars, {i: PaslElement(alg.nvars, {q1: a})}) \
                    - ModElement(d, alg.nvars, {j: PaslElement(alg.nvars, {q2: b})}) \
                    - ModElement(d, alg.nvars, expr.cofactors)
                out.append(syz)
    log.debug("[syzygy] %d S-remainder syzygies", len(out))
    return out


def _seed_degree(alt: LtAlgebra, G: Sequence[Poly]) -> int:
    top = 0
    for g in G:
        lm = leading_term(alt.order, g)[1]
        for s in alt.lam(lm):
            top = max(top, alt.base.degree(s) + alt.base.degree(lm))
    return top


def beta_syzygies(alt: LtAlgebra, gb: GroebnerBasis | Sequence[Poly],
                  follow_up_degree: int | None = None) -> list[ModElement]:
    """Compatibility syzygies s*e_i - sum(h_k*e_k).

    Every least annihilating monomial of every leading term contributes one;
    colon follow-ups are included up to `follow_up_degree` (by default the
    largest degree among the direct pairs).
    """
    G = [f if isinstance(f, PaslElement) else PaslElement(alt.nvars, f.terms) for f in gb]
    alg, d = alt.base, len(G)
    cap = follow_up_degree if follow_up_degree is not None else _seed_degree(alt, G)
    out = []
    for syz, r in ann_queue(alt, list(G), G, extend=False, max_degree=cap, use_oracle=False):
        if r:
            raise InternalConsistencyError(
                f"{alg.format_monomial(syz.monomial)} * f{syz.index + 1} leaves a remainder; "
                "the input is not a Gröbner basis"
            )
        out.append(
            ModElement.term(d, alg.nvars, syz.index, syz.monomial)
            - ModElement(d, alg.nvars, syz.cofactors)
        )
    log.debug("[syzygy] %d compatibility syzygies", len(out))
    return out


def divided_koszul(alt: LtAlgebra, gb: GroebnerBasis | Sequence[Poly]) -> list[ModElement]:
    """t_i*e_i - t_j*e_j with pi(LM f_i) t_i = m = pi(LM f_j) t_j, one per pair and m."""
    G = list(gb)
    alg, d = alt.base, len(G)
    out = []
    for i in range(d):
        lmf = leading_term(alt.order, G[i])[1]
        for j in range(i + 1, d):
            lmg = leading_term(alt.order, G[j])[1]
            for l in alt.lcm_set(lmf, lmg):
                (k1, q1), (k2, q2) = _pair_quotients(alt, lmf, lmg, l)
                out.append(ModElement.term(d, alg.nvars, i, q1, k1) - ModElement.term(d, alg.nvars, j, q2, k2))
    return out


def annihilator_syzygies(alt: LtAlgebra, gb: GroebnerBasis | Sequence[Poly]) -> list[ModElement]:
    """s*e_i for s in LAM(pi(LM f_i))."""
    G = list(gb)
    d = len(G)
    return [
        ModElement.term(d, alt.nvars, i, s)
        for i, g in enumerate(G)
        for s in alt.lam(leading_term(alt.order, g)[1])
    ]


@dataclass
class SchreyerBasis:
    order: GoodOrder
    tau: list[ModElement]
    beta: list[ModElement]

    @property
    def syzygies(self) -> list[ModElement]:
        return self.tau + self.beta

    def leading_monomials(self) -> list[ModMonomial]:
        return [s.leading_term(self.order)[1] for s in self.syzygies]


def schreyer_basis(alt: LtAlgebra, gb: GroebnerBasis | Sequence[Poly]) -> SchreyerBasis:
    G = list(gb)
    good = build_good_order(alt.base, alt.order, G)
    if alt.name == "custom":
        bad = alt.check_associative(min(3, max(alt.base.degree(leading_term(alt.order, g)[1]) for g in G) + 1))
        if bad is not None:
            raise InternalConsistencyError(
                "the custom algebra of leading terms is not associative at "
                + ", ".join(alt.base.format_monomial(e) for e in bad)
            )
    basis = SchreyerBasis(good, tau_syzygies(alt, G), beta_syzygies(alt, G))
    log.info("[syzygy] %d tau + %d beta syzygies for %d generators", len(basis.tau), len(basis.beta), len(G))
    return basis


def _module_lm(alg: PaslAlgebra, good: GoodOrder, index: int, a: ExpVec, b: ExpVec) -> Optional[tuple]:
    product = alg.multiply_monomials(a, b)
    if not product:
        return None
    return max(good.key(index, e) for e in product)


def validate_module_order(good: GoodOrder, alg: PaslAlgebra, max_degree: int) -> ValidationReport:
    """Sampled MATO-1/2/3 on module monomials m*e_i with deg m <= max_degree."""
    monos = list(alg.standard_upto(max_degree))
    one = (0,) * alg.nvars
    d = len(good.images)
    cells = [(i, m) for i in range(d) for m in monos]
    keys = {c: good.key(*c) for c in cells}
    checked = 0
    fmt = alg.format_monomial

    def fail(rule: str, detail: str, **extra: str) -> ValidationReport:
        return ValidationReport(False, max_degree, len(cells), checked, {"rule": rule, "detail": detail, **extra})

    for i, m in cells:
        if keys[(i, m)] < keys[(i, one)]:
            return fail("MATO-1", "m*e_i below e_i", f=fmt(m), index=str(i + 1))
    ordered = sorted(cells, key=keys.__getitem__)
    for x, (i, f) in enumerate(ordered):
        for j, g in ordered[x + 1:]:
            for h in monos:
                lf = _module_lm(alg, good, i, f, h)
                lg = _module_lm(alg, good, j, g, h)
                checked += 1
                if lf is not None and lg is not None and not lf < lg:
                    return fail("MATO-2", "f*e_i < g*e_j but LM(fh*e_i) >= LM(gh*e_j)",
                                f=fmt(f), g=fmt(g), h=fmt(h))
    for i in range(d):
        row = sorted(monos, key=lambda m: keys[(i, m)])
        for x, f in enumerate(row):
            for g in row[x + 1:]:
                for y, h in enumerate(row):
                    for k in row[y:]:
                        lf = _module_lm(alg, good, i, f, h)
                        lg = _module_lm(alg, good, i, g, k)
                        checked += 1
                        if lf is not None and lg is not None and not lf < lg:
                            return fail("MATO-3", "restriction to A*e_i is not a term order",
                                        f=fmt(f), g=fmt(g), h=fmt(h), k=fmt(k))
    return ValidationReport(True, max_degree, len(cells), checked)
