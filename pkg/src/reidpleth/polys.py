"""Sparse integer polynomials in a fixed number of variables.

A monomial is an exponent tuple; index ``i`` holds the exponent of
``x_{i+1}``.  Free-standing monomials (as produced by ``eta``) drop trailing
zeros; inside a :class:`SymPoly` every key has length ``nvars``.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


def trim(mono: Sequence[int]) -> Monomial:
    mono = list(mono)
    while mono and mono[-1] == 0:
        mono.pop()
    return tuple(mono)


def pad(mono: Sequence[int], nvars: int) -> Monomial:
    if len(trim(mono)) > nvars:
        raise ValueError(f"monomial {tuple(mono)!r} uses more than {nvars} variables")
    return tuple(mono[:nvars]) + (0,) * (nvars - len(mono))


def _as_int(c) -> int:
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise ValueError(f"non-integral coefficient {c}")
        return c.numerator
    return int(c)


class SymPoly:
    """Polynomial in ``nvars`` variables with big-integer coefficients.

    Despite the name nothing forces symmetry; :meth:`is_symmetric` checks it.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], int] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be non-negative")
        self.nvars = nvars
        clean: dict[Monomial, int] = {}
        for mono, c in (terms or {}).items():
            c = _as_int(c)
            if c:
                key = pad(mono, nvars)
                clean[key] = clean.get(key, 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Monomial, int]) -> SymPoly:
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, nvars: int, c: int = 1) -> SymPoly:
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, i: int) -> SymPoly:
        """The variable x_i (1-based)."""
        mono = [0] * nvars
        mono[i - 1] = 1
        return cls._raw(nvars, {tuple(mono): 1})

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: SymPoly) -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable counts differ: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if isinstance(other, int):
            other = SymPoly.constant(self.nvars, other)
        if not isinstance(other, SymPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return SymPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> SymPoly:
        return SymPoly._raw(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = SymPoly.constant(self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return SymPoly(self.nvars)
            return SymPoly._raw(self.nvars, {k: v * other for k, v in self.terms.items()})
        if not isinstance(other, SymPoly):
            return NotImplemented
        self._check(other)
        out: dict[Monomial, int] = defaultdict(int)
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                out[tuple(a + b for a, b in zip(k1, k2))] += v1 * v2
        return SymPoly._raw(self.nvars, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> SymPoly:
        out = SymPoly.constant(self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SymPoly.constant(self.nvars, other)
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"SymPoly({self.nvars}, {format_polynomial(self.terms, x_names(self.nvars))})"

    # -- queries ------------------------------------------------------------

    def coefficient(self, mono: Sequence[int]) -> int:
        return self.terms.get(pad(mono, self.nvars), 0)

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=-1)

    def truncate(self, max_degree: int) -> SymPoly:
        return SymPoly._raw(
            self.nvars, {k: v for k, v in self.terms.items() if sum(k) <= max_degree}
        )

    def homogeneous_component(self, d: int) -> SymPoly:
        return SymPoly._raw(self.nvars, {k: v for k, v in self.terms.items() if sum(k) == d})

    def evaluate(self, values: Sequence[int]) -> int:
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values")
        total = 0
        for mono, c in self.terms.items():
            term = c
            for v, e in zip(values, mono):
                if e:
                    term *= v**e
            total += term
        return total

    def permuted(self, perm: Sequence[int]) -> SymPoly:
        """Rename x_{i+1} -> x_{perm[i]+1}."""
        out = {}
        for mono, c in self.terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(mono):
                new[perm[i]] = e
            out[tuple(new)] = c
        return SymPoly._raw(self.nvars, out)

    def is_symmetric(self) -> bool:
        """Check invariance under every permutation of the variables.

        Groups monomials by sorted exponent vector: the polynomial is symmetric
        iff each group holds every rearrangement with one common coefficient.
        """
        groups: dict[Monomial, list[int]] = defaultdict(list)
        for mono, c in self.terms.items():
            groups[tuple(sorted(mono, reverse=True))].append(c)
        for key, coeffs in groups.items():
            if len(set(coeffs)) != 1 or len(coeffs) != _count_rearrangements(key):
                return False
        return True

    def dominant_terms(self) -> dict[Monomial, int]:
        """Terms whose exponent vector is weakly decreasing."""
        return {
            k: v
            for k, v in self.terms.items()
            if all(k[i] >= k[i + 1] for i in range(len(k) - 1))
        }


def _count_rearrangements(key: Sequence[int]) -> int:
    from math import factorial

    out = factorial(len(key))
    counts: dict[int, int] = defaultdict(int)
    for e in key:
        counts[e] += 1
    for m in counts.values():
        out //= factorial(m)
    return out


def distinct_permutations(vec: Sequence[int]) -> set[Monomial]:
    counts: dict[int, int] = defaultdict(int)
    for e in vec:
        counts[e] += 1
    out: set[Monomial] = set()
    cur: list[int] = []

    def rec() -> None:
        if len(cur) == len(vec):
            out.add(tuple(cur))
            return
        for e in list(counts):
            if counts[e]:
                counts[e] -= 1
                cur.append(e)
                rec()
                cur.pop()
                counts[e] += 1

    rec()
    return out


def monomial_symmetric(lam: Sequence[int], nvars: int) -> SymPoly:
    """m_lam(x_1, ..., x_nvars); zero if lam has more than nvars parts."""
    if len(lam) > nvars:
        return SymPoly(nvars)
    vec = tuple(lam) + (0,) * (nvars - len(lam))
    return SymPoly._raw(nvars, {mono: 1 for mono in distinct_permutations(vec)})


# ---------------------------------------------------------------------------
# product kernels over monomial multisets


def _radices(monomials: Sequence[Sequence[int]], nvars: int) -> list[int]:
    bound = [0] * nvars
    for mono in monomials:
        for i, e in enumerate(pad(mono, nvars)):
            bound[i] += e
    return [b + 1 for b in bound]


def _encoder(radices: Sequence[int]):
    def enc(mono: Sequence[int]) -> int:
        key = 0
        for e, base in zip(mono, radices):
            key = key * base + e
        return key

    def dec(key: int) -> Monomial:
        out = []
        for base in reversed(radices):
            key, e = divmod(key, base)
            out.append(e)
        return tuple(reversed(out))

    return enc, dec


def one_minus_product(monomials: Iterable[Sequence[int]], nvars: int) -> SymPoly:
    """Expand prod (1 - x^alpha) over a multiset of monomials.

    Exponent vectors are packed into mixed-radix integers sized so that no
    digit can overflow; shifting by a monomial is then integer addition.
    """
    monomials = [pad(m, nvars) for m in monomials]
    radices = _radices(monomials, nvars)
    enc, dec = _encoder(radices)
    cur: dict[int, int] = {0: 1}
    for mono in monomials:
        off = enc(mono)
        if off == 0:
            return SymPoly(nvars)
        nxt = dict(cur)
        get = nxt.get
        for key, c in cur.items():
            k2 = key + off
            v = get(k2, 0) - c
            if v:
                nxt[k2] = v
            else:
                del nxt[k2]
        cur = nxt
    return SymPoly._raw(nvars, {dec(k): v for k, v in cur.items()})


def elementary_of_multiset(
    monomials: Iterable[Sequence[int]],
    nvars: int,
    max_index: int,
    max_degree: int | None = None,
) -> list[SymPoly]:
    """e_0, ..., e_max_index evaluated at a multiset of monomials.

    Expands prod (1 + t x^alpha) keeping powers of ``t`` up to ``max_index``
    and, if given, total x-degree up to ``max_degree``.
    """
    monomials = [pad(m, nvars) for m in monomials]
    layers: list[dict[Monomial, int]] = [{(0,) * nvars: 1}] + [{} for _ in range(max_index)]
    for mono in monomials:
        d = sum(mono)
        for j in range(max_index, 0, -1):
            src = layers[j - 1]
            if not src:
                continue
            dst = layers[j]
            for key, c in src.items():
                if max_degree is not None and sum(key) + d > max_degree:
                    continue
                k2 = tuple(a + b for a, b in zip(key, mono))
                v = dst.get(k2, 0) + c
                if v:
                    dst[k2] = v
                else:
                    del dst[k2]
    return [SymPoly._raw(nvars, layer) for layer in layers]


def monomial_multiset(poly: SymPoly) -> list[Monomial]:
    """Read a polynomial with non-negative integer coefficients as a multiset."""
    out: list[Monomial] = []
    for mono in sorted(poly.terms):
        c = poly.terms[mono]
        if c < 0:
            raise ValueError("negative coefficient: not a multiset of monomials")
        out.extend([mono] * c)
    return out


# ---------------------------------------------------------------------------
# text


def x_names(nvars: int) -> list[str]:
    return [f"x{i}" for i in range(1, nvars + 1)]


def format_polynomial(terms: Mapping[Sequence[int], int], names: Sequence[str]) -> str:
    """Human-readable form, terms by total degree then reverse-lex exponents."""
    if not terms:
        return "0"
    keys = sorted(terms, key=lambda k: (sum(k), tuple(-e for e in k)))
    parts = []
    for i, key in enumerate(keys):
        c = terms[key]
        factors = []
        for name, e in zip(names, key):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = "*".join(factors)
        mag = abs(c)
        if body:
            text = body if mag == 1 else f"{mag}*{body}"
        else:
            text = str(mag)
        if i == 0:
            parts.append(text if c > 0 else f"-{text}")
        else:
            parts.append(("+ " if c > 0 else "- ") + text)
    return " ".join(parts)
