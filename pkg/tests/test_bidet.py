import random

import pytest

from oracles import expand_columns, random_columns
from pasl_groebner import bidet
from pasl_groebner.bidet import (
    BideterminantAlgebra,
    Bitableau,
    BitableauOrder,
    determinantal_basis,
    expand_to_monomials,
    lcm_bitableaux,
    leading_bitableau,
    lt_quotient,
    maximal_minors,
    parse_bitableau,
    straighten,
)
from pasl_groebner.errors import InputFormatError, InvalidAlgebra
from pasl_groebner.polyring import OrdTermOrder, is_groebner


def from_rows(row_tableau, col_tableau):
    """Bitableau from tableaux written row by row."""
    width = len(row_tableau[0])
    cols = []
    for k in range(width):
        rows = tuple(r[k] for r in row_tableau if len(r) > k)
        cs = tuple(r[k] for r in col_tableau if len(r) > k)
        cols.append((rows, cs))
    sign, t = Bitableau.of(cols)
    assert sign == 1
    return t


def test_generators_and_sigma_for_2x2():
    alg = BideterminantAlgebra(2, 2)
    assert alg.names == ("x11", "x12", "x21", "x22", "[12|12]")
    assert alg.degrees == (1, 1, 1, 1, 2)
    # x12 and x21 are the only incomparable pair of minors
    assert alg.sigma == ((0, 1, 1, 0, 0),)


def test_matrix_size_cap(monkeypatch):
    monkeypatch.setattr(bidet, "MAX_MATRIX_SIZE", 3)
    with pytest.raises(InvalidAlgebra):
        BideterminantAlgebra(4, 2)
    assert BideterminantAlgebra(4, 2, allow_large=True).nvars == 8 + 6


def test_straighten_2x2_product():
    alg = BideterminantAlgebra(2, 2)
    f = alg.from_columns(parse_bitableau("det(1|2)*det(2|1)"))
    expected = alg.element({(1, 0, 0, 1, 0): 1, (0, 0, 0, 0, 1): -1})
    assert f == expected


def test_repeated_indices_vanish():
    alg = BideterminantAlgebra(3, 3)
    assert not alg.from_columns([((1, 1), (1, 2))])
    assert alg.from_columns([((2, 1), (1, 2))]) == alg.from_columns([((1, 2), (1, 2))]).scale(-1)


def test_straightening_is_sound_on_random_bitableaux():
    rng = random.Random(20240611)
    checked = 0
    algebras = {}
    while checked < 500:
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        raw = random_columns(rng, n, m, 6)
        if not raw:
            continue
        alg = algebras.setdefault((n, m), BideterminantAlgebra(n, m))
        f = alg.from_columns(raw)
        assert alg.expand(f) == expand_columns(raw, n, m)
        sign, t = Bitableau.of(raw)
        content = t.content(n, m)
        order = alg.default_order()
        lead = max(f.terms, key=order.key)
        assert alg.bitableau(lead) == leading_bitableau(Bitableau(), t)
        assert f.terms[lead] == sign
        for exp in f.terms:
            s = alg.bitableau(exp)
            assert s.is_standard()
            assert s.content(n, m) == content
        checked += 1


def test_leading_term_of_products_has_coefficient_one():
    alg = BideterminantAlgebra(3, 3)
    order = alg.default_order()
    rng = random.Random(7)
    for _ in range(150):
        a = rng.choice(alg.enumerate_standard(rng.randint(1, 3)))
        b = rng.choice(alg.enumerate_standard(rng.randint(1, 3)))
        product = alg.multiply_monomials(a, b)
        lead = max(product, key=order.key)
        assert product[lead] == 1
        assert alg.bitableau(lead) == leading_bitableau(alg.bitableau(a), alg.bitableau(b))


def test_straighten_function_matches_algebra():
    sign, t = Bitableau.of([((1,), (2,)), ((2,), (1,))])
    out = straighten(t)
    assert out == {
        Bitableau((((1,), (1,)), ((2,), (2,)))): 1,
        Bitableau((((1, 2), (1, 2)),)): -1,
    }


def test_lt_quotient_inverts_leading_product():
    alg = BideterminantAlgebra(3, 3)
    rng = random.Random(3)
    for _ in range(60):
        a = alg.bitableau(rng.choice(alg.enumerate_standard(2)))
        b = alg.bitableau(rng.choice(alg.enumerate_standard(2)))
        assert lt_quotient(leading_bitableau(a, b), a) == b


def test_lcm_worked_example():
    f = from_rows([[1, 1], [2, 2], [3]], [[1, 1], [2, 2], [3]])
    g = from_rows([[1], [3]], [[1], [2]])
    cols_322 = [[[1, 1, 1], [2, 2, 2], [3]], [[1, 1, 1], [2, 2, 3], [3]], [[1, 1, 2], [2, 2, 3], [3]]]
    expected = {from_rows([[1, 1, 1], [2, 2, 3], [3]], c) for c in cols_322}
    assert len(expected) == 3
    assert set(lcm_bitableaux(f, g, 3, 3)) == expected
    for t in expected:
        assert lt_quotient(t, f) is not None
        assert lt_quotient(t, g) is not None


def test_lcm_rejects_multiples_that_do_not_divide():
    f = from_rows([[1, 1], [2, 2], [3]], [[1, 1], [2, 2], [3]])
    g = from_rows([[1], [3]], [[1], [2]])
    # shape (3,3,2): the row quotient by f is the single column (1,3,3)
    rows_332 = [[[1, 1, 1], [2, 2, 3], [3, 3]], [[1, 1, 2], [2, 2, 3], [3, 3]]]
    cols_332 = [[[1, 1, 1], [2, 2, 2], [3, 3]], [[1, 1, 1], [2, 2, 3], [3, 3]], [[1, 1, 2], [2, 2, 3], [3, 3]]]
    # first row [1,1,2]: the row quotient by g repeats 2 in its second column
    cols_322 = [[[1, 1, 1], [2, 2, 2], [3]], [[1, 1, 1], [2, 2, 3], [3]], [[1, 1, 2], [2, 2, 3], [3]]]
    excluded = {from_rows(r, c) for r in rows_332 for c in cols_332}
    excluded |= {from_rows([[1, 1, 2], [2, 2, 3], [3]], c) for c in cols_322}
    assert len(excluded) == 9
    for t in excluded:
        assert t.is_standard()
        assert lt_quotient(t, f) is None or lt_quotient(t, g) is None
    assert not excluded & set(lcm_bitableaux(f, g, 3, 3))


def test_lcm_of_comparable_minors_is_the_product():
    a = from_rows([[1]], [[1]])
    b = from_rows([[2]], [[2]])
    assert lcm_bitableaux(a, b, 2, 2) == [Bitableau((((1,), (1,)), ((2,), (2,))))]


def test_bitableau_order_puts_size_first_then_shape():
    alg = BideterminantAlgebra(2, 2)
    order = alg.default_order()
    x11x22 = alg.exponent(from_rows([[1, 2]], [[1, 2]]))
    d = alg.exponent(from_rows([[1], [2]], [[1], [2]]))
    x11 = alg.exponent(from_rows([[1]], [[1]]))
    assert order.key(x11) < order.key(d) < order.key(x11x22)


def test_weighted_bitableau_orders_validate():
    alg = BideterminantAlgebra(2, 2)
    with pytest.raises(InvalidAlgebra):
        BitableauOrder(alg, row_weights=(1, 0))
    order = BitableauOrder(alg, row_weights=(1, 2))
    assert order.name == "bitableau-weighted"
    assert order.to_json() == {"kind": "bitableau", "row_weights": [1, 2]}


def test_determinantal_bases():
    alg = BideterminantAlgebra(3, 3)
    assert len(determinantal_basis(alg, 2)) == 10
    assert len(maximal_minors(alg)) == 1
    with pytest.raises(InvalidAlgebra):
        determinantal_basis(alg, 4)


def test_minor_expansions_form_a_diagonal_groebner_basis():
    alg = BideterminantAlgebra(3, 3)
    expanded = [alg.expand(g) for g in determinantal_basis(alg, 2)]
    assert is_groebner(expanded, OrdTermOrder.diagonal(3, 3))


def test_expand_to_monomials_of_a_minor():
    t = from_rows([[1], [2]], [[1], [2]])
    poly = expand_to_monomials(t, 2, 2)
    assert poly.terms == {(1, 0, 0, 1): 1, (0, 1, 1, 0): -1}


@pytest.mark.parametrize("text,expected", [
    ("det(1|2)", [((1,), (2,))]),
    ("det(12|13)", [((1, 2), (1, 3))]),
    ("det(1 2|2 3)*det(3|1)", [((1, 2), (2, 3)), ((3,), (1,))]),
    ("det(1,3|2,1)", [((1, 3), (2, 1))]),
])
def test_parse_bitableau(text, expected):
    assert parse_bitableau(text) == expected


@pytest.mark.parametrize("text", ["det(1 2|3)", "x11", "det(|)"])
def test_parse_bitableau_rejects_malformed(text):
    with pytest.raises(InputFormatError):
        parse_bitableau(text)


def test_from_columns_checks_range():
    alg = BideterminantAlgebra(2, 2)
    with pytest.raises(InputFormatError):
        alg.from_columns([((3,), (1,))])


def test_quotient_series_uses_expansion():
    alg = BideterminantAlgebra(2, 2)
    d = alg.generator("[12|12]")
    series = alg.quotient_series([d])
    assert series.coefficients(3) == [1, 4, 9, 16]
    assert series.pole_order == 3


def test_shape_and_bitableau_comparison():
    assert bidet.compare_shapes((2,), (1, 1)) == -1
    assert bidet.compare_shapes((1,), (1, 1)) == -1
    assert bidet.compare_shapes((2, 1), (2, 1)) == 0
    _, minor = Bitableau.of([((1, 2), (1, 2))])
    diagonal = from_rows([[1, 2]], [[1, 2]])
    assert bidet.compare_bitableaux(minor, diagonal) == -1
    assert bidet.compare_bitableaux(diagonal, minor) == 1


def test_standardness_and_diagonal_monomial():
    assert bidet.is_standard_bitableau(from_rows([[1, 2]], [[1, 2]]))
    assert not bidet.is_standard_bitableau(from_rows([[1, 2]], [[2, 1]]))
    _, minor = Bitableau.of([((1, 2), (1, 3))])
    # x11 * x23 in a 2x3 matrix
    assert bidet.diagonal_leading_monomial(minor, 2, 3) == (1, 0, 0, 0, 0, 1)
