import itertools

import pytest

from reidpleth.freelie import (
    F_poly,
    F_sym,
    chen_basis,
    eta,
    format_word,
    hall_basis,
    parse_chen_word,
    parse_hall_word,
    word_degree,
)
from reidpleth.partitions import chen_dimension, kw_coefficient, partitions_of, witt_dimension
from reidpleth.polys import SymPoly
from reidpleth.symfunc import convert, phi_r


def test_hall_listing_three_generators():
    h = hall_basis(3, 3)
    assert h[0] == [1, 2, 3]
    assert [format_word(w) for w in h[1]] == ["[1,2]", "[1,3]", "[2,3]"]
    assert [format_word(w) for w in h[2]] == [
        "[1,[1,2]]", "[1,[1,3]]", "[2,[1,2]]", "[2,[1,3]]",
        "[2,[2,3]]", "[3,[1,2]]", "[3,[1,3]]", "[3,[2,3]]",
    ]


def test_hall_words_satisfy_conditions():
    levels = hall_basis(3, 6)
    pos = {w: i for i, w in enumerate(itertools.chain.from_iterable(levels))}
    for k, level in enumerate(levels, start=1):
        for w in level:
            assert word_degree(w) == k
            if k > 1:
                y, z = w
                assert pos[y] < pos[z]
                if not isinstance(z, int):
                    assert pos[z[0]] <= pos[y]


@pytest.mark.parametrize("r", range(2, 6))
def test_basis_sizes(r):
    for k, level in enumerate(hall_basis(r, 6), start=1):
        assert len(level) == witt_dimension(r, k)
    for k, level in enumerate(chen_basis(r, 6), start=1):
        assert len(level) == (r if k == 1 else chen_dimension(r, k))


def test_chen_words():
    assert chen_basis(2, 2)[1] == [(2, 1)]
    assert len(chen_basis(3, 2)[1]) == 3
    assert chen_basis(2, 3)[2] == [(2, 1, 1), (2, 1, 2)]
    # brute force over all index tuples
    for r, k in [(3, 4), (4, 3)]:
        want = sorted(
            w for w in itertools.product(range(1, r + 1), repeat=k)
            if w[0] > w[1] and all(w[i] <= w[i + 1] for i in range(1, k - 1))
        )
        assert chen_basis(r, k)[k - 1] == want


def test_eta():
    assert eta((1, 2)) == (1, 1)
    assert eta(3) == (0, 0, 1)
    assert eta((2, (1, 2))) == (1, 2)
    assert eta((3, 1, 2, 2)) == (1, 2, 1)


def test_word_text_round_trip():
    for w in hall_basis(3, 5)[4]:
        assert parse_hall_word(format_word(w)) == w
    for w in chen_basis(3, 4)[3]:
        assert parse_chen_word(format_word(w, "metabelian")) == w


def test_F_poly_examples():
    assert F_poly(3, 2) == SymPoly(3, {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1})
    assert F_poly(3, 3) == SymPoly(3, {(2, 1, 0): 1, (2, 0, 1): 1, (1, 2, 0): 1, (0, 2, 1): 1,
                                      (1, 0, 2): 1, (0, 1, 2): 1, (1, 1, 1): 2})
    for v in ("free", "metabelian"):
        assert F_poly(4, 1, v) == SymPoly(4, {(1, 0, 0, 0): 1, (0, 1, 0, 0): 1, (0, 0, 1, 0): 1, (0, 0, 0, 1): 1})


@pytest.mark.parametrize("variant", ["free", "metabelian"])
def test_bridge_identity(variant):
    for r in range(2, 5):
        for k in range(1, 6):
            p = F_poly(r, k, variant)
            assert p.is_symmetric()
            assert phi_r(F_sym(k, variant=variant), r) == p


def test_F_poly_mass_is_witt_dimension():
    for r in range(2, 5):
        for k in range(1, 6):
            assert sum(F_poly(r, k).terms.values()) == witt_dimension(r, k)


def test_F_sym_schur_expansions():
    assert convert(F_sym(1), "s").terms == {(1,): 1}
    assert convert(F_sym(2), "s").terms == {(1, 1): 1}
    assert convert(F_sym(3), "s").terms == {(2, 1): 1}
    assert convert(F_sym(4), "s").terms == {(3, 1): 1, (2, 1, 1): 1}
    assert convert(F_sym(3, variant="metabelian"), "s").terms == {(2, 1): 1}


@pytest.mark.parametrize("k", range(1, 8))
def test_F_sym_matches_major_index_rule(k):
    s = convert(F_sym(k), "s")
    assert all(c > 0 for c in s.terms.values())
    want = {lam: kw_coefficient(lam, k) for lam in partitions_of(k) if kw_coefficient(lam, k)}
    assert s.terms == want
