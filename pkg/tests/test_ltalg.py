from fractions import Fraction

import pytest

from pasl_groebner import config
from pasl_groebner.bidet import BideterminantAlgebra
from pasl_groebner.errors import DegreeMismatch, IncompatiblePair, InvalidAlgebra, NoFinitePresentation
from pasl_groebner.ltalg import LtAlgebra, LtKind
from pasl_groebner.pasl import RuleAlgebra
from pasl_groebner.polyring import Poly


def bidet_2x2(kind):
    alg = BideterminantAlgebra(2, 2)
    return alg, LtAlgebra(alg, alg.default_order(), kind)


def mono(alg, *names):
    exp = [0] * alg.nvars
    for name in names:
        exp[alg.index(name)] += 1
    return tuple(exp)


def cone_algebra():
    return RuleAlgebra(["x", "y", "z"], [1, 1, 1], [(0, 2, 0)], {(0, 2, 0): {(1, 0, 1): 1}})


def test_disc_kills_nonstandard_products():
    alg, alt = bidet_2x2(LtKind.disc())
    assert alt.lt_multiply(mono(alg, "x12"), mono(alg, "x21")) is None
    assert alt.lt_multiply(mono(alg, "x11"), mono(alg, "x22")) == (Fraction(1), mono(alg, "x11", "x22"))


def test_gen_keeps_leading_terms():
    alg, alt = bidet_2x2(LtKind.gen())
    assert alt.lt_multiply(mono(alg, "x12"), mono(alg, "x21")) == (Fraction(1), mono(alg, "x11", "x22"))


def test_division_depends_on_the_algebra_of_leading_terms():
    alg, gen = bidet_2x2(LtKind.gen())
    _, disc = bidet_2x2(LtKind.disc())
    target = mono(alg, "x11", "x22")
    assert gen.try_divide(target, mono(alg, "x12")) == (Fraction(1), mono(alg, "x21"))
    assert disc.try_divide(target, mono(alg, "x12")) is None
    assert disc.try_divide(target, mono(alg, "x11")) == (Fraction(1), mono(alg, "x22"))
    with pytest.raises(DegreeMismatch):
        disc.lt_divide(mono(alg, "x11"), target)


def test_least_annihilating_monomials():
    alg, disc = bidet_2x2(LtKind.disc())
    _, gen = bidet_2x2(LtKind.gen())
    assert disc.lam(mono(alg, "x12")) == [mono(alg, "x21")]
    assert disc.lam(mono(alg, "x11")) == []
    assert gen.lam(mono(alg, "x12")) == []


def test_colon_annihilator_needs_a_nonzero_product():
    alg, disc = bidet_2x2(LtKind.disc())
    with pytest.raises(IncompatiblePair):
        disc.colon_ann(mono(alg, "x12"), mono(alg, "x21"))


def test_disc_lcm_is_the_standard_lcm():
    alg, disc = bidet_2x2(LtKind.disc())
    assert disc.lcm_set(mono(alg, "x12"), mono(alg, "x11", "x22")) == [mono(alg, "x11", "x12", "x22")]
    assert disc.lcm_set(mono(alg, "x12"), mono(alg, "x21")) == []


@pytest.mark.parametrize("mode", ["presentation", "enumerate"])
def test_gen_lcm_may_have_several_minimal_elements(monkeypatch, mode):
    monkeypatch.setattr(config, "LCM_MODE", mode)
    alg = cone_algebra()
    alt = LtAlgebra(alg, alg.default_order(), LtKind.gen())
    found = alt.lcm_set((0, 1, 0), (1, 0, 0))
    assert set(found) == {(1, 1, 0), (1, 0, 1)}


def test_presentation_route_needs_gen(monkeypatch):
    monkeypatch.setattr(config, "LCM_MODE", "presentation")
    alg = cone_algebra()
    alt = LtAlgebra(alg, alg.default_order(), LtKind.custom([((0, 1, 0), (0, 0, 1))]))
    with pytest.raises(NoFinitePresentation):
        alt.lcm_set((0, 1, 0), (1, 0, 0))


def test_gen_presentation_truncates_straightening():
    alg = cone_algebra()
    alt = LtAlgebra(alg, alg.default_order(), LtKind.gen())
    assert alt.presentation() == [Poly(3, {(0, 2, 0): 1, (1, 0, 1): -1})]


def test_lam_on_zero_products():
    alg = RuleAlgebra(["x", "y"], [1, 1], [(1, 1)], {(1, 1): {}})
    alt = LtAlgebra(alg, alg.default_order(), LtKind.gen())
    assert alt.lam((1, 0)) == [(0, 1)]
    assert alt.lam((0, 1)) == [(1, 0)]


def test_custom_zero_pairs():
    alg = BideterminantAlgebra(2, 2)
    kind = LtKind.custom([(mono(alg, "x11"), mono(alg, "x22"))])
    alt = LtAlgebra(alg, alg.default_order(), kind)
    assert alt.lt_multiply(mono(alg, "x22"), mono(alg, "x11")) is None
    assert alt.lt_multiply(mono(alg, "x12"), mono(alg, "x21")) == (Fraction(1), mono(alg, "x11", "x22"))
    f = alg.generator("x11")
    g = alg.generator("x22")
    assert not alt.compatible(f, g)
    assert alt.compatible(f, alg.generator("x12"))
    assert alt.to_json()["kind"] == "custom"


def test_custom_pairs_must_be_standard():
    alg = BideterminantAlgebra(2, 2)
    with pytest.raises(InvalidAlgebra):
        LtAlgebra(alg, alg.default_order(), LtKind.custom([(mono(alg, "x12", "x21"), mono(alg, "x11"))]))
    with pytest.raises(InvalidAlgebra):
        LtKind("other")


def test_bitableau_order_validates_on_gen():
    alg, gen = bidet_2x2(LtKind.gen())
    assert gen.validate_order(3).ok
    assert gen.check_associative(3) is None


def test_multiples_are_cached_by_degree():
    alg, alt = bidet_2x2(LtKind.disc())
    x12 = mono(alg, "x12")
    multiples = alt.lt_multiples(x12, 1)
    # x12 * x21 is killed in disc
    assert set(multiples) == {mono(alg, "x11", "x12"), mono(alg, "x12", "x12"), mono(alg, "x12", "x22")}
    assert multiples[mono(alg, "x12", "x22")] == (Fraction(1), mono(alg, "x22"))
    assert alt.lt_multiples(x12, 1) is multiples
