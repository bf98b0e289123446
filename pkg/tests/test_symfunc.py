from fractions import Fraction
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brute import basis_poly, schur_poly
from reidpleth.partitions import kostka, partitions_of
from reidpleth.polys import SymPoly, monomial_symmetric
from reidpleth.symfunc import (
    BASES,
    EExpansion,
    SymFunc,
    complete,
    conversion_path,
    convert,
    dumps,
    e_expand,
    elementary,
    eval_e_expansion,
    loads,
    multiply,
    phi_r,
    schur,
)


def random_symfunc(rng, basis, degree, nterms=4, integral=True):
    pool = [lam for n in range(degree + 1) for lam in partitions_of(n)]
    terms = {}
    for _ in range(nterms):
        lam = rng.choice(pool)
        terms[lam] = rng.randint(-5, 5) if integral else Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return SymFunc(basis, degree, terms)


def test_examples():
    for k in range(1, 7):
        assert convert(elementary(k), "s").terms == {(1,) * k: 1}
    for n in range(2, 7):
        assert convert(schur((n - 1, 1)), "h").terms == {(n - 1, 1): 1, (n,): -1}
    m = convert(schur((4, 2, 1)), "m")
    assert m.terms == {
        (4, 2, 1): 1, (4, 1, 1, 1): 2, (3, 3, 1): 1, (3, 2, 2): 2, (3, 2, 1, 1): 4,
        (3, 1, 1, 1, 1): 8, (2, 2, 2, 1): 6, (2, 2, 1, 1, 1): 11, (2, 1, 1, 1, 1, 1): 20, (1,) * 7: 35,
    }
    assert all(m.terms[mu] == kostka((4, 2, 1), mu) for mu in m.terms)


def test_every_pair_has_a_route():
    for a in BASES:
        for b in BASES:
            path = conversion_path(a, b)
            assert path[0] == a and path[-1] == b


@pytest.mark.parametrize("source", BASES)
@pytest.mark.parametrize("target", BASES)
def test_round_trip(source, target):
    rng = random.Random(hash((source, target)) & 0xFFFF)
    for degree in (3, 6, 8):
        f = random_symfunc(rng, source, degree)
        assert convert(convert(f, target), source).terms == f.terms


@pytest.mark.parametrize("basis", BASES)
def test_phi_r_matches_definition(basis):
    for r in (1, 2, 3):
        for n in range(5):
            for lam in partitions_of(n):
                got = phi_r(SymFunc(basis, n, {lam: 1}), r)
                assert got == basis_poly(basis, lam, r), (basis, lam, r)


def test_phi_r_schur_is_kostka_sum():
    for n in range(7):
        for lam in partitions_of(n):
            want = SymPoly(3)
            for mu in partitions_of(n):
                if len(mu) <= 3:
                    want = want + monomial_symmetric(mu, 3) * kostka(lam, mu)
            assert phi_r(schur(lam), 3) == want


def test_phi_r_examples():
    assert phi_r(elementary(4), 3) == SymPoly(3)
    assert phi_r(elementary(1), 3) == SymPoly(3, {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1})
    assert phi_r(schur((2, 1)), 2) == SymPoly(2, {(2, 1): 1, (1, 2): 1})
    assert phi_r(schur((3, 1)), 2) == schur_poly((3, 1), 2)


def test_multiply_examples():
    h1 = complete(1, 2)
    assert convert(h1 * h1, "m").terms == {(2,): 1, (1, 1): 2}
    f = schur((2, 1), 6)
    assert multiply(f, SymFunc("s", 6, {(): 1})) == f


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**16), st.sampled_from(BASES))
def test_multiply_commutative_associative(seed, basis):
    rng = random.Random(seed)
    f, g, h = (random_symfunc(rng, basis, 6, 3) for _ in range(3))
    assert (f * g).terms == (g * f).terms
    assert ((f * g) * h).terms == (f * (g * h)).terms


def test_multiply_agrees_with_polynomials():
    rng = random.Random(7)
    for basis in BASES:
        f, g = random_symfunc(rng, basis, 5, 3), random_symfunc(rng, basis, 5, 3)
        assert phi_r(f * g, 5) == (phi_r(f, 5) * phi_r(g, 5)).truncate(5)


def test_e_expand_table_entries():
    x = [SymPoly.variable(3, i) for i in (1, 2, 3)]
    one = SymPoly.constant(3)
    p = (one - x[0]) * (one - x[1]) * (one - x[2])
    assert e_expand(p).terms == {(): 1, (1,): -1, (2,): 1, (3,): -1}
    p = (one - x[0] * x[1]) * (one - x[0] * x[2]) * (one - x[1] * x[2])
    assert e_expand(p).terms == {(): 1, (2,): -1, (3, 1): 1, (3, 3): -1}


def test_e_expand_rejects_asymmetric():
    with pytest.raises(ValueError):
        e_expand(SymPoly(2, {(1, 0): 1}))


symmetric_polys = st.tuples(
    st.integers(1, 4),
    st.lists(
        st.tuples(st.lists(st.integers(0, 3), min_size=1, max_size=4), st.integers(-9, 9)),
        max_size=5,
    ),
)


@settings(max_examples=200, deadline=None)
@given(symmetric_polys)
def test_e_expand_round_trip(data):
    r, raw = data
    p = SymPoly(r)
    for exps, c in raw:
        lam = tuple(sorted(exps[:r], reverse=True))
        if sum(lam) <= 8:
            p = p + monomial_symmetric(lam, r) * c
    g = e_expand(p)
    assert all(not lam or lam[0] <= r for lam in g.terms)
    assert g.to_polynomial() == p


@pytest.mark.parametrize("basis", BASES)
def test_e_expand_is_filtered_e_basis(basis):
    rng = random.Random(11)
    for _ in range(5):
        f = random_symfunc(rng, basis, 8, 4)
        for r in (2, 3, 4):
            got = e_expand(phi_r(f, r))
            want = {lam: c for lam, c in convert(f, "e").terms.items() if not lam or lam[0] <= r}
            assert got.terms == want


def test_eval_e_expansion():
    assert eval_e_expansion(EExpansion(2, {(): 1, (2,): -1}), {1: 5, 2: 1}) == 0
    g32 = EExpansion(3, {(): 1, (2,): -1, (3, 1): 1, (3, 3): -1})
    assert eval_e_expansion(g32, {1: 0, 2: 0, 3: -1}) == 0
    assert eval_e_expansion(EExpansion(4, {(): 1}), [3, 1, 4, 1]) == 1


def test_eexpansion_product():
    rng = random.Random(3)
    for _ in range(10):
        a = EExpansion(3, {(rng.randint(1, 3), rng.randint(1, 3)): rng.randint(-3, 3), (): 1})
        b = EExpansion(3, {(rng.randint(1, 3),): rng.randint(-3, 3), (2, 2): 1})
        assert (a * b).to_polynomial() == a.to_polynomial() * b.to_polynomial()
        assert (a**3).to_polynomial() == a.to_polynomial() ** 3


def test_serialization_round_trip():
    rng = random.Random(5)
    for basis in BASES:
        f = random_symfunc(rng, basis, 6, 5, integral=basis != "p")
        text = dumps(f)
        assert text.startswith(f"# symfunc basis={basis} degree=6\n")
        assert dumps(loads(text)) == text
        assert loads(text).terms == f.terms
    g = EExpansion(3, {(): 1, (2,): -1, (3, 1): 1, (3, 3): -1})
    assert dumps(g) == "# eexpansion nvars=3\ne:0 1\ne:2 -1\ne:3,1 1\ne:3,3 -1\n"
    assert loads(dumps(g)) == g


def test_truncation():
    f = SymFunc("s", 3, {(2, 1): 1, (2, 2): 5})
    assert f.terms == {(2, 1): 1}
    assert (schur((1,), 1) * schur((1,), 1)).terms == {}
