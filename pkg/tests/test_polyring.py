from fractions import Fraction

import pytest

from oracles import monomial_quotient_count, polynomial_quotient_dim
from pasl_groebner.errors import NonHomogeneousInput
from pasl_groebner.polyring import (
    HilbertSeries,
    MonomialIdeal,
    OrdTermOrder,
    Poly,
    colon_ideal,
    divide,
    hilbert_homogeneous,
    hilbert_monomial,
    ideal_intersection,
    is_groebner,
    krull_dimension,
    normal_form,
    ord_buchberger,
)


def P(nvars, *terms):
    return Poly(nvars, {e: c for c, e in terms})


def test_poly_arithmetic_drops_zero_terms():
    f = P(2, (1, (1, 0)), (2, (0, 1)))
    g = P(2, (-1, (1, 0)), (Fraction(1, 2), (0, 0)))
    assert (f + g).terms == {(0, 1): 2, (0, 0): Fraction(1, 2)}
    assert not (f - f)
    assert (f * g).terms[(2, 0)] == -1
    assert f.scale(0).is_zero()


def test_orders_compare_as_expected():
    lex = OrdTermOrder.lex(3)
    deglex = OrdTermOrder.deglex(3)
    grevlex = OrdTermOrder.degrevlex(3)
    assert lex.key((1, 0, 0)) > lex.key((0, 5, 5))
    assert deglex.key((0, 5, 5)) > deglex.key((1, 0, 0))
    # x*z < y^2 in degrevlex, x*z > y^2 in deglex
    assert grevlex.key((1, 0, 1)) < grevlex.key((0, 2, 0))
    assert deglex.key((1, 0, 1)) > deglex.key((0, 2, 0))


def test_division_identity():
    order = OrdTermOrder.deglex(2)
    f = P(2, (1, (2, 1)), (1, (1, 2)), (1, (0, 2)))
    G = [P(2, (1, (1, 1)), (-1, (0, 0))), P(2, (1, (0, 2)), (-1, (0, 0)))]
    quotients, r = divide(f, G, order)
    total = r
    for q, g in zip(quotients, G):
        total = total + q * g
    assert total == f
    assert all(not any(all(a >= b for a, b in zip(e, g.leading_term(order)[1])) for g in G) for e in r.terms)


def test_buchberger_on_twisted_cubic():
    # 2x2 minors of [[x, y, z], [y, z, w]]
    order = OrdTermOrder.degrevlex(4)
    x, y, z, w = (Poly.variable(4, i) for i in range(4))
    gens = [x * z - y * y, x * w - y * z, y * w - z * z]
    G = ord_buchberger(gens, order)
    assert is_groebner(G, order)
    assert len(G) == 3
    for g in gens:
        assert not normal_form(g, G, order)


def test_reduced_basis_is_independent_of_generators():
    order = OrdTermOrder.lex(2)
    x, y = Poly.variable(2, 0), Poly.variable(2, 1)
    one = Poly.constant(2)
    a = ord_buchberger([x * x - y, x * y - one], order)
    b = ord_buchberger([x * x - y, x * y - one, (x * x - y) * y + (x * y - one)], order)
    assert a == b


def test_ideal_intersection_and_colon():
    order = OrdTermOrder.degrevlex(2)
    x, y = Poly.variable(2, 0), Poly.variable(2, 1)
    inter = ideal_intersection([x], [y], order)
    assert inter == [x * y]
    colon = colon_ideal([x * x * y], x, order)
    assert colon == [x * y]


def test_hilbert_monomial_matches_count():
    ideal = MonomialIdeal.from_generators(2, [(2, 0), (1, 1)])
    series = hilbert_monomial(ideal, [1, 1])
    assert series == HilbertSeries.build([1, 1, -1], [1])
    assert series.coefficients(6) == [monomial_quotient_count(list(ideal.generators), 2, d) for d in range(7)]
    assert krull_dimension(series) == 1


def test_hilbert_monomial_weighted_degrees():
    ideal = MonomialIdeal.from_generators(2, [(1, 1)])
    series = hilbert_monomial(ideal, [1, 2])
    # k[x, y]/(xy) with deg y = 2: 1, x, x^2 + y, x^3, x^4 + y^2, ...
    assert series.coefficients(4) == [1, 1, 2, 1, 2]


def test_hilbert_series_equality_is_rational():
    a = HilbertSeries.build([1, 1], [1, 1, 1])
    b = HilbertSeries.build([1, 0, -1], [1, 1, 1, 1])
    assert a == b
    assert a.pole_order == 3
    assert HilbertSeries.build([1], [1, 1, 1, 1]).pole_order == 4
    assert HilbertSeries.zero().is_zero()


def test_hilbert_series_json_uses_strings():
    doc = HilbertSeries.build([1, 2], [1, 1, 1, 1]).to_json()
    assert doc["numerator"] == ["1", "2"]
    assert doc["pole_order"] == "4"
    assert all(isinstance(v, str) for v in doc["denominator"])


def test_hilbert_homogeneous_against_rank_counts():
    order = OrdTermOrder.degrevlex(4)
    x, y, z, w = (Poly.variable(4, i) for i in range(4))
    gens = [x * z - y * y, x * w - y * z, y * w - z * z]
    series = hilbert_homogeneous(gens, [1] * 4, order)
    assert series == HilbertSeries.build([1, 2], [1, 1])
    assert series.coefficients(4) == [polynomial_quotient_dim(gens, 4, d) for d in range(5)]


def test_hilbert_homogeneous_rejects_inhomogeneous():
    x = Poly.variable(2, 0)
    with pytest.raises(NonHomogeneousInput):
        hilbert_homogeneous([x * x - x], [1, 1], OrdTermOrder.degrevlex(2))
