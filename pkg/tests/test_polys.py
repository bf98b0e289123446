import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import elementary_poly, naive_one_minus_product
from reidpleth.polys import (
    SymPoly,
    elementary_of_multiset,
    format_polynomial,
    monomial_multiset,
    monomial_symmetric,
    one_minus_product,
)

monomials = st.lists(st.integers(0, 2), min_size=3, max_size=3).map(tuple)


@settings(max_examples=50, deadline=None)
@given(st.lists(monomials, max_size=6))
def test_one_minus_product_matches_naive(monos):
    if any(sum(m) == 0 for m in monos):
        assert one_minus_product(monos, 3) == SymPoly(3)
    else:
        assert one_minus_product(monos, 3) == naive_one_minus_product(monos, 3)


@settings(max_examples=40, deadline=None)
@given(st.lists(monomials, max_size=6))
def test_elementary_of_multiset_generating_function(monos):
    layers = elementary_of_multiset(monos, 3, len(monos))
    # sum_j (-1)^j e_j(M) = prod (1 - x^a)
    alt = SymPoly(3)
    for j, layer in enumerate(layers):
        alt = alt + layer * (-1) ** j
    assert alt == naive_one_minus_product(monos, 3)


def test_elementary_of_variables_is_elementary():
    units = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    layers = elementary_of_multiset(units, 4, 4)
    for j in range(5):
        assert layers[j] == elementary_poly(j, 4)


def test_symmetry_check():
    assert monomial_symmetric((2, 1), 3).is_symmetric()
    assert not SymPoly(2, {(2, 1): 1}).is_symmetric()
    # same orbit, different coefficients
    assert not SymPoly(2, {(2, 1): 1, (1, 2): 2}).is_symmetric()


def test_multiset_rejects_negative():
    assert monomial_multiset(SymPoly(2, {(1, 0): 2, (0, 1): 2})) == [(0, 1), (0, 1), (1, 0), (1, 0)]
    with pytest.raises(ValueError):
        monomial_multiset(SymPoly(2, {(1, 0): -1}))


def test_format():
    p = SymPoly(3, {(0, 0, 0): 1, (0, 1, 0): -1, (1, 0, 1): 1, (2, 0, 0): -1})
    assert format_polynomial(p.terms, ["a0", "a1", "a2"]) == "1 - a1 - a0^2 + a0*a2"
    assert format_polynomial({}, ["x"]) == "0"


def test_arithmetic():
    x1, x2 = SymPoly.variable(2, 1), SymPoly.variable(2, 2)
    p = (x1 + x2) ** 2 - 2 * x1 * x2
    assert p == SymPoly(2, {(2, 0): 1, (0, 2): 1})
    assert p.evaluate([3, 4]) == 25
    with pytest.raises(ValueError):
        SymPoly(2, {(1, 0): 1}) + SymPoly(3)
