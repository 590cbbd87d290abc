"""Hilbert series and Krull dimension of graded quotients A / I.

A / I has the same Hilbert series as the disc algebra of leading terms modulo
the leading ideal, and that quotient is a monomial quotient of the polynomial
ring on H: Sigma plus the leading monomials of a disc Gröbner basis.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Optional, Sequence

from .errors import InvalidAlgebra, NonHomogeneousInput
from .groebner import GroebnerBasis, pasl_groebner
from .ltalg import LtAlgebra, LtKind
from .pasl import PaslAlgebra, PaslElement, PaslTermOrder
from .polyring import HilbertSeries, MonomialIdeal, hilbert_monomial, krull_dimension

log = logging.getLogger(__name__)


@dataclass
class GradedQuotientSpec:
    algebra: PaslAlgebra
    ideal_gens: list[PaslElement] = field(default_factory=list)
    order: Optional[PaslTermOrder] = None

    def __post_init__(self) -> None:
        if self.order is None:
            self.order = self.algebra.default_order()
        self.ideal_gens = [g for g in self.ideal_gens if g]

    def validate(self) -> None:
        if not self.order.graded:
            raise NonHomogeneousInput(f"order {self.order.name} is not graded by the generator degrees")
        for g in self.ideal_gens:
            if not g.is_homogeneous(self.algebra.degrees):
                raise NonHomogeneousInput(f"{g.to_text(self.algebra.names)} is not homogeneous")


def disc_basis(spec: GradedQuotientSpec) -> GroebnerBasis:
    spec.validate()
    alt = LtAlgebra(spec.algebra, spec.order, LtKind.disc())
    return pasl_groebner(alt, spec.ideal_gens, reduced=True)


def leading_ideal(spec: GradedQuotientSpec, gb: GroebnerBasis | None = None) -> MonomialIdeal:
    """Sigma plus the leading monomials of the disc basis, in the polynomial ring on H."""
    gb = gb if gb is not None else disc_basis(spec)
    alg = spec.algebra
    return MonomialIdeal.from_generators(alg.nvars, list(alg.sigma) + gb.leading_monomials())


def hilbert_pasl(spec: GradedQuotientSpec) -> HilbertSeries:
    ideal = leading_ideal(spec)
    series = hilbert_monomial(ideal, spec.algebra.degrees)
    log.info("[hilbert] %d monomial generators: %s", len(ideal.generators), series.to_text())
    return series


def hilbert_direct(spec: GradedQuotientSpec) -> HilbertSeries:
    """The same series through a polynomial-ring Gröbner basis of the presentation."""
    spec.validate()
    return spec.algebra.quotient_series(spec.ideal_gens)


def krull_dimension_pasl(spec: GradedQuotientSpec) -> int:
    return krull_dimension(hilbert_pasl(spec))


def rank1_closed_form(n: int, m: int) -> HilbertSeries:
    """Series of the n x m matrices of rank at most 1.

    Symmetric in n and m (transposing the matrix), so n > m is accepted as is.
    """
    if n < 1 or m < 1:
        raise InvalidAlgebra("matrix dimensions must be positive")
    numerator = [comb(n - 1, i) * comb(m - 1, i) for i in range(min(n, m))]
    return HilbertSeries.build(numerator, [1] * (n + m - 1))


def rank1_ladder_ideal(n: int, m: int, b: int, c: int) -> MonomialIdeal:
    """Diagonal leading monomials x_{i1 j1} x_{i2 j2} of the 2-minors inside the top-left b x c corner."""
    if not (1 <= b <= n and 1 <= c <= m):
        raise InvalidAlgebra(f"corner {b}x{c} does not fit in {n}x{m}")
    nv = n * m
    gens = []
    for i1 in range(1, b + 1):
        for i2 in range(i1 + 1, b + 1):
            for j1 in range(1, c + 1):
                for j2 in range(j1 + 1, c + 1):
                    exp = [0] * nv
                    exp[(i1 - 1) * m + j1 - 1] = 1
                    exp[(i2 - 1) * m + j2 - 1] = 1
                    gens.append(tuple(exp))
    return MonomialIdeal.from_generators(nv, gens)


def rank1_ladder_series(n: int, m: int, b: int, c: int, removed: int = 0) -> HilbertSeries:
    """Closed form for the corner ideal plus `removed` variables outside the corner."""
    if removed < 0 or removed > n * m - b * c:
        raise InvalidAlgebra(f"cannot remove {removed} of the {n * m - b * c} variables outside the corner")
    numerator = [comb(b - 1, i) * comb(c - 1, i) for i in range(min(b, c))]
    return HilbertSeries.build(numerator, [1] * (n * m - (b - 1) * (c - 1) - removed))


def ladder_with_removed(n: int, m: int, b: int, c: int, removed: Sequence[tuple[int, int]]) -> MonomialIdeal:
    """rank1_ladder_ideal plus the listed variables (i, j) outside the corner."""
    base = rank1_ladder_ideal(n, m, b, c)
    extra = []
    for i, j in removed:
        if i <= b and j <= c:
            raise InvalidAlgebra(f"x{i}{j} lies inside the corner")
        exp = [0] * (n * m)
        exp[(i - 1) * m + j - 1] = 1
        extra.append(tuple(exp))
    return MonomialIdeal.from_generators(n * m, list(base.generators) + extra)
