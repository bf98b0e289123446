"""Integer partitions, Young tableaux and the closed counting formulas.

Partitions are plain tuples of positive integers in weakly decreasing order;
the empty tuple is the unique partition of 0.  Tableaux are tuples of rows.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]


def as_partition(parts: Sequence[int]) -> Partition:
    """Sort ``parts`` into a partition, dropping zeros."""
    parts = tuple(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {tuple(parts)!r}")
    return tuple(sorted((p for p in parts if p), reverse=True))


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def _partitions_bounded(n: int, max_part: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse lexicographic order.

    >>> partitions_of(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_partitions_bounded(n, n))


@lru_cache(maxsize=None)
def partitions_in_box(n: int, max_len: int, max_part: int) -> tuple[Partition, ...]:
    """Partitions of ``n`` with at most ``max_len`` parts, each at most ``max_part``.

    Reverse lexicographic order, as in :func:`partitions_of`.
    """

    def rec(m: int, bound: int, slots: int) -> Iterator[Partition]:
        if m == 0:
            yield ()
            return
        if slots == 0 or bound * slots < m:
            return
        for first in range(min(m, bound), 0, -1):
            for rest in rec(m - first, first, slots - 1):
                yield (first,) + rest

    return tuple(rec(n, max_part, max_len))


def conjugate(p: Sequence[int]) -> Partition:
    """Transpose of the Young diagram."""
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > i) for i in range(p[0]))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True when ``lam`` dominates ``mu`` (both of the same weight)."""
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def multiplicities(p: Sequence[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for part in p:
        out[part] = out.get(part, 0) + 1
    return out


# ---------------------------------------------------------------------------
# number theory


def mobius(d: int) -> int:
    """The Möbius function: 0 on non-squarefree ``d``, else (-1)**(#prime factors)."""
    if d < 1:
        raise ValueError("mobius is defined for positive integers")
    sign = 1
    q = 2
    while q * q <= d:
        if d % q == 0:
            d //= q
            if d % q == 0:
                return 0
            sign = -sign
        q += 1
    if d > 1:
        sign = -sign
    return sign


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def witt_dimension(r: int, k: int) -> int:
    """Dimension N(r, k) of the degree-k part of the free Lie algebra of rank r."""
    if r < 1 or k < 1:
        raise ValueError("witt_dimension needs r >= 1 and k >= 1")
    total = sum(mobius(d) * r ** (k // d) for d in divisors(k))
    q, rem = divmod(total, k)
    if rem:
        raise ArithmeticError(f"Witt sum {total} not divisible by {k}")
    return q


def chen_dimension(r: int, k: int) -> int:
    """Dimension M(r, k) = (k-1) * C(k+r-2, k) of the degree-k part of the
    free metabelian Lie algebra of rank r (k >= 2)."""
    if r < 2 or k < 2:
        raise ValueError("chen_dimension needs r >= 2 and k >= 2")
    return (k - 1) * comb(k + r - 2, k)


# ---------------------------------------------------------------------------
# tableaux


def tableau_shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def is_semistandard(t: Tableau) -> bool:
    for i, row in enumerate(t):
        if any(row[j] > row[j + 1] for j in range(len(row) - 1)):
            return False
        if i and any(t[i - 1][j] >= row[j] for j in range(len(row))):
            return False
    return is_partition(tableau_shape(t))


def is_standard(t: Tableau) -> bool:
    entries = sorted(x for row in t for x in row)
    return entries == list(range(1, len(entries) + 1)) and is_semistandard(t)


def enumerate_ssyt(shape: Sequence[int], weight: Sequence[int]) -> list[Tableau]:
    """All semistandard tableaux of ``shape`` in which ``i`` occurs ``weight[i-1]`` times.

    ``weight`` may be any composition.  Cells are filled in row-major order,
    trying smaller entries first, so the output order is deterministic.
    Returns an empty list when the weights of shape and content differ.
    """
    shape = tuple(shape)
    if not is_partition(shape):
        raise ValueError(f"{shape!r} is not a partition")
    if sum(shape) != sum(weight):
        return []
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    grid = [[0] * length for length in shape]
    remaining = list(weight)
    nvals = len(remaining)
    out: list[Tableau] = []

    def place(idx: int) -> None:
        if idx == len(cells):
            out.append(tuple(tuple(row) for row in grid))
            return
        i, j = cells[idx]
        low = 1
        if j:
            low = max(low, grid[i][j - 1])
        if i:
            low = max(low, grid[i - 1][j] + 1)
        for v in range(low, nvals + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                grid[i][j] = v
                place(idx + 1)
                remaining[v - 1] += 1
        grid[i][j] = 0

    place(0)
    return out


@lru_cache(maxsize=None)
def _kostka(shape: Partition, weight: tuple[int, ...]) -> int:
    # peel off the largest entry as a horizontal strip
    if not weight:
        return 1 if not shape else 0
    size = weight[-1]
    rest = weight[:-1]
    n = len(shape)
    total = 0

    def strips(i: int, left: int, inner: list[int]) -> None:
        nonlocal total
        if i == n:
            if left == 0:
                total += _kostka(as_partition(inner), rest)
            return
        below = shape[i + 1] if i + 1 < n else 0
        for keep in range(max(below, shape[i] - left), shape[i] + 1):
            inner.append(keep)
            strips(i + 1, left - (shape[i] - keep), inner)
            inner.pop()

    strips(0, size, [])
    return total


def kostka(shape: Sequence[int], weight: Sequence[int]) -> int:
    """Number of SSYT of ``shape`` and content ``weight`` (any composition)."""
    shape = tuple(shape)
    if sum(shape) != sum(weight):
        return 0
    # Kostka numbers are symmetric in the content
    return _kostka(shape, as_partition(weight))


def enumerate_syt(shape: Sequence[int]) -> list[Tableau]:
    return enumerate_ssyt(shape, (1,) * sum(shape))


def descents(t: Tableau) -> list[int]:
    row_of = {x: i for i, row in enumerate(t) for x in row}
    return [i for i in range(1, len(row_of)) if row_of[i + 1] > row_of[i]]


def major_index(t: Tableau) -> int:
    """Sum of the descents of a standard tableau."""
    t = tuple(tuple(row) for row in t)
    if not is_standard(t):
        raise ValueError("major_index needs a standard Young tableau")
    return sum(descents(t))


def kw_coefficient(shape: Sequence[int], n: int) -> int:
    """Count standard tableaux of ``shape`` whose major index is 1 mod ``n``.

    This is the multiplicity of s_shape in the degree-n Lie character.
    """
    if n < 1 or sum(shape) != n:
        raise ValueError("shape must be a partition of n >= 1")
    return sum(1 for t in enumerate_syt(shape) if major_index(t) % n == 1 % n)
