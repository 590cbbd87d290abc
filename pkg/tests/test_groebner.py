import logging
import random
from fractions import Fraction

import pytest

from pasl_groebner import config
from pasl_groebner.bidet import BideterminantAlgebra, determinantal_basis
from pasl_groebner.errors import UnsupportedZeroDivisorLeadingTerm
from pasl_groebner.formats import builtin_orders, load_ideal
from pasl_groebner.groebner import (
    ann_closure,
    is_ann_closed,
    is_s_closed,
    macaulay_basis,
    membership,
    pasl_groebner,
    quotient_dimension,
    reduce_basis,
    remainder,
    s_closure,
    s_set,
    standard_expression,
    universal_check,
    verify_gb,
)
from pasl_groebner.ltalg import LtAlgebra, LtKind
from pasl_groebner.pasl import RuleAlgebra, WeightedLexOrder, no_term_order_algebra

from oracles import polynomial_quotient_dim


def alt_for(alg, kind):
    return LtAlgebra(alg, alg.default_order(), kind)


def zero_product_algebra():
    """k[x, y] / (xy)."""
    return RuleAlgebra(["x", "y"], [1, 1], [(1, 1)], {(1, 1): {}})


@pytest.fixture
def small():
    alg = BideterminantAlgebra(2, 2)
    x12 = alg.generator("x12")
    return alg, x12, alg.multiply(x12, alg.generator("x21"))


def test_disc_basis_of_one_variable(small):
    alg, x12, product = small
    gb = pasl_groebner(alt_for(alg, LtKind.disc()), [x12], reduced=True)
    assert gb.elements == [x12, product]
    # x11, x12, x21, x22, [12|12]
    assert product.terms == {(1, 0, 0, 1, 0): 1, (0, 0, 0, 0, 1): -1}


def test_gen_basis_of_one_variable(small):
    alg, x12, product = small
    alt = alt_for(alg, LtKind.gen())
    gb = pasl_groebner(alt, [x12], reduced=True)
    assert gb.elements == [x12]
    assert membership(gb, product)
    assert verify_gb(alt, [x12], [x12])
    assert not verify_gb(alt_for(alg, LtKind.disc()), [x12], [x12])
    assert verify_gb(alt_for(alg, LtKind.disc()), [x12], [x12, product])


def test_reduced_basis_does_not_depend_on_generators(small):
    alg, x12, product = small
    alt = alt_for(alg, LtKind.disc())
    first = pasl_groebner(alt, [x12], reduced=True)
    second = pasl_groebner(alt, [product.scale(3), x12.scale(Fraction(1, 2))], reduced=True)
    assert first.elements == second.elements

    alg3 = BideterminantAlgebra(3, 3)
    for kind in (LtKind.gen(), LtKind.disc()):
        alt3 = alt_for(alg3, kind)
        a = pasl_groebner(alt3, load_ideal(alg3, "minors:2"), reduced=True)
        b = pasl_groebner(alt3, load_ideal(alg3, "minors:2+"), reduced=True)
        assert a.elements == b.elements


@pytest.mark.parametrize("kind", [LtKind.gen(), LtKind.disc()])
def test_minors_form_a_basis(kind):
    alg = BideterminantAlgebra(3, 3)
    alt = alt_for(alg, kind)
    gens = load_ideal(alg, "minors:2")
    candidate = determinantal_basis(alg, 2)
    assert len(gens) == 9 and len(candidate) == 10
    assert verify_gb(alt, gens, candidate)
    assert not verify_gb(alt, gens, gens)
    gb = pasl_groebner(alt, gens, reduced=True)
    assert sorted(gb.elements, key=repr) == sorted(candidate, key=repr)


def random_element(alg, rng, top):
    f = alg.zero()
    for _ in range(rng.randint(1, 3)):
        m = rng.choice(alg.enumerate_standard(rng.randint(1, top)))
        f = f + alg.monomial(m, Fraction(rng.randint(-5, 5) or 1, rng.randint(1, 3)))
    return f


@pytest.mark.parametrize("n,m,ideal", [(2, 2, "x12"), (3, 3, "minors:2"), (3, 3, "minors:3")])
@pytest.mark.parametrize("kind", [LtKind.gen(), LtKind.disc()])
def test_remainder_is_independent_of_basis_order(n, m, ideal, kind):
    alg = BideterminantAlgebra(n, m)
    alt = alt_for(alg, kind)
    gb = pasl_groebner(alt, load_ideal(alg, ideal), reduced=True)
    rng = random.Random(20240611)
    for _ in range(50):
        f = random_element(alg, rng, 3)
        expected = remainder(alt, f, gb.elements)
        for _ in range(2):
            shuffled = list(gb.elements)
            rng.shuffle(shuffled)
            assert remainder(alt, f, shuffled) == expected


def test_standard_expression_reassembles():
    alg = BideterminantAlgebra(2, 3)
    alt = alt_for(alg, LtKind.gen())
    gb = pasl_groebner(alt, load_ideal(alg, "minors:2"))
    g = alg.generator
    f = alg.multiply(g("x11"), g("x22")) + alg.multiply(g("x12"), g("x23")) + g("x13")
    expr = standard_expression(alt, f, gb.elements)
    total = expr.remainder
    for i, h in expr.cofactors.items():
        total = total + alg.multiply(h, gb.elements[i])
    assert total == f


def test_products_with_ideal_elements_reduce_to_zero():
    alg = BideterminantAlgebra(3, 3)
    rng = random.Random(20240611)
    gens = load_ideal(alg, "minors:2")
    for kind in (LtKind.gen(), LtKind.disc()):
        gb = pasl_groebner(alt_for(alg, kind), gens)
        for _ in range(15):
            m = rng.choice(alg.enumerate_standard(rng.randint(1, 2)))
            f = alg.multiply(alg.monomial(m), rng.choice(gens))
            assert membership(gb, f)
        assert not membership(gb, alg.generator("x11"))


@pytest.mark.parametrize("n,m,top", [(2, 2, 5), (2, 3, 4), (3, 3, 3)])
def test_macaulay_basis_counts_the_quotient(n, m, top):
    alg = BideterminantAlgebra(n, m)
    gens = load_ideal(alg, "minors:2")
    expanded = [alg.expand(f) for f in gens]
    for kind in (LtKind.gen(), LtKind.disc()):
        gb = pasl_groebner(alt_for(alg, kind), gens)
        for d in range(top + 1):
            expected = polynomial_quotient_dim(expanded, n * m, d)
            assert len(macaulay_basis(gb, d)) == expected
            assert quotient_dimension(alg, gens, d) == expected


def test_zero_product_algebra_needs_annihilators():
    alg = zero_product_algebra()
    x, y = alg.generator("x"), alg.generator("y")
    alt = alt_for(alg, LtKind.gen())
    gb = pasl_groebner(alt, [x + y], reduced=True)
    assert gb.elements == [x + y, alg.multiply(y, y)]
    assert [len(macaulay_basis(gb, d)) for d in range(4)] == [1, 1, 0, 0]
    assert is_s_closed(alt, gb.elements)
    assert is_ann_closed(alt, [x + y], gb.elements)
    assert not is_ann_closed(alt, [x + y], [x + y])


def test_bounded_oracle_warns(monkeypatch, caplog):
    monkeypatch.setattr(logging.getLogger("pasl_groebner"), "propagate", True)
    monkeypatch.setattr(config, "ORACLE_DEGREE", 3)
    alg = zero_product_algebra()
    x, y = alg.generator("x"), alg.generator("y")
    alt = alt_for(alg, LtKind.gen())
    with caplog.at_level(logging.WARNING, logger="pasl_groebner.groebner"):
        assert is_ann_closed(alt, [x + y], [x + y, alg.multiply(y, y)])
    assert "only checked up to degree 3" in caplog.text

    caplog.clear()
    disc = alt_for(BideterminantAlgebra(2, 2), LtKind.disc())
    x12 = disc.base.generator("x12")
    with caplog.at_level(logging.WARNING, logger="pasl_groebner.groebner"):
        is_ann_closed(disc, [x12], [x12])
    assert "only checked" not in caplog.text


def test_zerodivisor_leading_terms_need_the_oracle(monkeypatch):
    monkeypatch.setattr(config, "ANN_ORACLE", True)
    alg = zero_product_algebra()
    x = alg.generator("x")
    alt = alt_for(alg, LtKind.gen())
    assert verify_gb(alt, [x], [x])
    monkeypatch.setattr(config, "ANN_ORACLE", False)
    with pytest.raises(UnsupportedZeroDivisorLeadingTerm):
        verify_gb(alt, [x], [x])


def test_universal_check_over_builtin_orders(small):
    alg, x12, product = small
    orders = builtin_orders(alg)
    report = universal_check(alg, [x12], [x12, product], orders, [LtKind.gen(), LtKind.disc()], max_degree=2)
    assert len(report.rows) == 2 * len(orders)
    assert report.ok
    report = universal_check(alg, [x12], [x12], orders, [LtKind.disc()], max_degree=2)
    assert {row["status"] for row in report.rows} == {"fail"}
    assert report.to_json()["ok"] is False


@pytest.mark.parametrize("r", [2, 3])
def test_minors_are_a_universal_basis(r):
    alg = BideterminantAlgebra(3, 3)
    gens = load_ideal(alg, f"minors:{r}")
    candidate = load_ideal(alg, f"minors:{r}+")
    orders = builtin_orders(alg)
    assert len(orders) >= 3
    report = universal_check(alg, gens, candidate, orders, [LtKind.gen(), LtKind.disc()], max_degree=2)
    assert len(report.rows) == 2 * len(orders)
    assert {row["status"] for row in report.rows} == {"pass"}

    rng = random.Random(r)
    products = []
    for _ in range(100):
        m = rng.choice(alg.enumerate_standard(rng.randint(1, 6 - r)))
        products.append(alg.multiply(alg.monomial(m), rng.choice(gens)))
    for kind in (LtKind.gen(), LtKind.disc()):
        alt = alt_for(alg, kind)
        assert all(not remainder(alt, f, candidate) for f in products)


def test_universal_check_flags_invalid_orders():
    alg = no_term_order_algebra()
    x = alg.generator("x")
    order = WeightedLexOrder.build(alg)
    report = universal_check(alg, [x], [x], [order], [LtKind.gen()], max_degree=2)
    assert report.rows[0]["status"] == "order-invalid"
    assert report.rows[0]["violation"]["rule"] == "ATO-2"


def test_s_polynomials_of_the_disc_basis(small):
    alg, x12, product = small
    alt = alt_for(alg, LtKind.disc())
    assert s_set(alt, x12, x12) == [alg.zero()]
    # one least common multiple: x11*x12*x22
    (s,) = s_set(alt, x12, product)
    assert s
    assert not remainder(alt, s, [x12, product])
    assert [g.terms for g in s_closure(alt, [x12])] == [x12.terms]
    assert len(s_closure(alt, [x12, product])) == 2


def test_ann_closure_adds_the_annihilated_product(small):
    alg, x12, product = small
    alt = alt_for(alg, LtKind.disc())
    G, syzygies = ann_closure(alt, [x12])
    assert [g.terms for g in G] == [x12.terms, product.terms]
    first = syzygies[0]
    assert (first.monomial, first.index) == ((0, 0, 1, 0, 0), 0)
    assert set(first.cofactors) == {1}


def test_reduce_basis_drops_duplicates_and_normalizes(small):
    alg, x12, product = small
    alt = alt_for(alg, LtKind.disc())
    reduced = reduce_basis(alt, [product.scale(3), x12, x12.scale(2)])
    assert [g.terms for g in reduced] == [x12.terms, product.terms]
