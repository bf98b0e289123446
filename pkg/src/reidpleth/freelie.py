"""Hall and Chen bases of free (metabelian) nilpotent Lie algebras.

A Hall word is either a generator index ``i`` (an ``int`` >= 1) or a pair
``(Y, Z)`` standing for the bracket [Y, Z].  A Chen word is a tuple of
generator indices ``(i1, ..., ik)`` read as the left-normed bracket
[X_i1, ..., X_ik].

Hall order: generators by index, lower degree before higher degree, and
within one degree brackets [Y, Z] are sorted by the positions of Y and Z in
the order built so far.  Any total order gives a basis; this one reproduces
the usual listing for three generators.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

from .partitions import divisors, mobius
from .polys import Monomial, SymPoly, trim
from .symfunc import SymFunc, schur

HallWord = Union[int, tuple]
ChenWord = tuple[int, ...]

FREE = "free"
METABELIAN = "metabelian"
VARIANTS = (FREE, METABELIAN)


def check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    return variant


def word_degree(w: HallWord | ChenWord) -> int:
    return len(_leaves(w))


@lru_cache(maxsize=None)
def _hall_levels(r: int, c: int) -> tuple[tuple[HallWord, ...], ...]:
    if c == 1:
        return (tuple(range(1, r + 1)),)
    levels = list(_hall_levels(r, c - 1))
    pos: dict[HallWord, int] = {}
    for level in levels:
        for w in level:
            pos[w] = len(pos)
    new = []
    for k in range(1, c):
        for y in levels[k - 1]:
            for z in levels[c - k - 1]:
                if pos[y] >= pos[z]:
                    continue
                if not isinstance(z, int) and pos[z[0]] > pos[y]:
                    continue
                new.append((y, z))
    new.sort(key=lambda w: (pos[w[0]], pos[w[1]]))
    return tuple(levels) + (tuple(new),)


def hall_basis(r: int, c: int) -> list[list[HallWord]]:
    """Hall words of degree 1..c over generators 1..r, grouped by degree."""
    if r < 2 or c < 1:
        raise ValueError("hall_basis needs r >= 2 and c >= 1")
    return [list(level) for level in _hall_levels(r, c)]


def _nondecreasing(length: int, low: int, high: int):
    if length == 0:
        yield ()
        return
    for first in range(low, high + 1):
        for rest in _nondecreasing(length - 1, first, high):
            yield (first,) + rest


def chen_basis(r: int, c: int) -> list[list[ChenWord]]:
    """Chen words (i1 > i2 <= i3 <= ... <= ik) of length 1..c, lex order."""
    if r < 2 or c < 1:
        raise ValueError("chen_basis needs r >= 2 and c >= 1")
    levels: list[list[ChenWord]] = [[(i,) for i in range(1, r + 1)]]
    for k in range(2, c + 1):
        words = []
        for i1 in range(2, r + 1):
            for i2 in range(1, i1):
                for tail in _nondecreasing(k - 2, i2, r):
                    words.append((i1, i2) + tail)
        levels.append(sorted(words))
    return levels


def basis(r: int, c: int, variant: str = FREE) -> list[list]:
    return hall_basis(r, c) if check_variant(variant) == FREE else chen_basis(r, c)


def _leaves(w) -> list[int]:
    if isinstance(w, int):
        return [w]
    out: list[int] = []
    for part in w:
        out.extend(_leaves(part))
    return out


def eta(w: HallWord | ChenWord) -> Monomial:
    """Commutative monomial of a word: x_i raised to the number of occurrences of i."""
    leaves = _leaves(w)
    exps = [0] * max(leaves)
    for i in leaves:
        exps[i - 1] += 1
    return trim(exps)


def F_poly(r: int, k: int, variant: str = FREE) -> SymPoly:
    """Sum of eta over the degree-k basis words, as a polynomial in r variables."""
    words = basis(r, k, variant)[k - 1]
    out: dict = {}
    for w in words:
        mono = eta(w)
        out[mono] = out.get(mono, 0) + 1
    return SymPoly(r, out)


def F_sym(k: int, degree: int | None = None, variant: str = FREE) -> SymFunc:
    """The symmetric function whose truncations are the F_poly(r, k, variant).

    free: (1/k) sum_{d | k} mu(d) p_d^(k/d), in the p-basis.
    metabelian: s_{k-1,1}, with s_1 at k = 1, in the s-basis.
    """
    if k < 1:
        raise ValueError("k must be positive")
    degree = k if degree is None else degree
    if degree < k:
        raise ValueError("degree must be at least k")
    if check_variant(variant) == FREE:
        terms = {}
        for d in divisors(k):
            if mobius(d):
                terms[(d,) * (k // d)] = Fraction(mobius(d), k)
        return SymFunc("p", degree, terms)
    return schur((k - 1, 1) if k > 1 else (1,), degree)


# ---------------------------------------------------------------------------
# text


def format_word(w: HallWord | ChenWord, variant: str = FREE) -> str:
    if variant == METABELIAN:
        return "(" + ",".join(map(str, w)) + ")"
    if isinstance(w, int):
        return str(w)
    return f"[{format_word(w[0])},{format_word(w[1])}]"


def parse_hall_word(text: str) -> HallWord:
    text = text.strip()
    if not text.startswith("["):
        return int(text)
    inner = text[1:-1]
    depth = 0
    for i, ch in enumerate(inner):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == "," and depth == 0:
            return (parse_hall_word(inner[:i]), parse_hall_word(inner[i + 1 :]))
    raise ValueError(f"malformed Hall word {text!r}")


def parse_chen_word(text: str) -> ChenWord:
    return tuple(int(x) for x in text.strip().strip("()").split(","))
