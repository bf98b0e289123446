"""Degree-truncated symmetric functions over the m, e, h, p and s bases.

A :class:`SymFunc` holds exact coefficients (``int`` or ``Fraction``) keyed by
partitions, plus the truncation degree ``D``: it stands for the symmetric
function modulo everything of degree > D.

Change of basis works one homogeneous component at a time along a small
graph of direct routes:

* m <-> s  Kostka numbers / leading-term peeling
* m <-> e  0-1 matrix counts / leading-term peeling
* s <-> h  Jacobi-Trudi determinant / Kostka numbers
* s <-> e  dual Jacobi-Trudi determinant / transposed Kostka numbers
* e <-> p, h <-> p  Newton identities

Any other pair is routed through the shortest chain of these.
"""

from __future__ import annotations

from collections import defaultdict, deque
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Iterable, Mapping, Sequence, Union

from .partitions import (
    Partition,
    as_partition,
    conjugate,
    kostka,
    multiplicities,
    partitions_in_box,
    partitions_of,
)
from .polys import SymPoly, format_polynomial, monomial_symmetric, trim

BASES = ("m", "e", "h", "p", "s")
Coeff = Union[int, Fraction]
Component = dict[Partition, Coeff]


def _norm(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _clean(terms: Mapping[Partition, Coeff]) -> dict[Partition, Coeff]:
    return {k: _norm(v) for k, v in terms.items() if v}


def _axpy(acc: dict, c: Coeff, terms: Mapping) -> None:
    """acc += c * terms, dropping zeros."""
    for k, v in terms.items():
        s = acc.get(k, 0) + c * v
        if s:
            acc[k] = s
        else:
            acc.pop(k, None)


class SymFunc:
    """A symmetric function truncated at degree ``degree`` in one basis.

    Terms of weight above ``degree`` are discarded on construction.  Equality
    compares the functions (converting bases if needed) and ignores the
    truncation degree.
    """

    __slots__ = ("basis", "degree", "terms")

    def __init__(self, basis: str, degree: int, terms: Mapping[Sequence[int], Coeff] | None = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
        if degree < 0:
            raise ValueError("degree must be non-negative")
        self.basis = basis
        self.degree = degree
        acc: dict[Partition, Coeff] = {}
        for lam, c in (terms or {}).items():
            lam = as_partition(lam)
            if sum(lam) <= degree and c:
                acc[lam] = acc.get(lam, 0) + c
        self.terms = _clean(acc)

    @classmethod
    def _raw(cls, basis: str, degree: int, terms: dict) -> SymFunc:
        obj = cls.__new__(cls)
        obj.basis = basis
        obj.degree = degree
        obj.terms = terms
        return obj

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> SymFunc:
        if isinstance(other, (int, Fraction)):
            return SymFunc(self.basis, self.degree, {(): other})
        if isinstance(other, SymFunc):
            return convert(other, self.basis)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        _axpy(out, 1, other.terms)
        degree = min(self.degree, other.degree)
        return SymFunc(self.basis, degree, out)

    __radd__ = __add__

    def __neg__(self) -> SymFunc:
        return SymFunc._raw(self.basis, self.degree, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymFunc(self.basis, self.degree, {k: v * other for k, v in self.terms.items()})
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / other)
        return NotImplemented

    def __pow__(self, n: int) -> SymFunc:
        out = one(self.degree, self.basis)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SymFunc(self.basis, self.degree, {(): other})
        if not isinstance(other, SymFunc):
            return NotImplemented
        return convert(other, self.basis).terms == self.terms

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"SymFunc({self.basis!r}, {self.degree}, 0)"
        body = " + ".join(
            f"{c}*{self.basis}{_fmt_partition(lam)}" for lam, c in sorted_terms(self.terms)
        )
        return f"SymFunc({self.basis!r}, {self.degree}, {body})"

    # -- queries ------------------------------------------------------------

    def coefficient(self, lam: Sequence[int]) -> Coeff:
        return self.terms.get(as_partition(lam), 0)

    def items(self):
        return self.terms.items()

    def component(self, n: int) -> SymFunc:
        return SymFunc._raw(self.basis, self.degree, {k: v for k, v in self.terms.items() if sum(k) == n})

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def to(self, basis: str) -> SymFunc:
        return convert(self, basis)

    def truncate(self, degree: int) -> SymFunc:
        return SymFunc(self.basis, degree, self.terms)

    def is_integral(self) -> bool:
        """True when the monomial expansion has integer coefficients."""
        return all(isinstance(c, int) for c in convert(self, "m").terms.values())


# ---------------------------------------------------------------------------
# constructors


def basis_element(basis: str, lam: Sequence[int], degree: int | None = None) -> SymFunc:
    lam = as_partition(lam)
    return SymFunc(basis, sum(lam) if degree is None else degree, {lam: 1})


def one(degree: int, basis: str = "s") -> SymFunc:
    return SymFunc(basis, degree, {(): 1})


def elementary(n: int, degree: int | None = None) -> SymFunc:
    return basis_element("e", (n,) if n else (), degree if degree is not None else n)


def complete(n: int, degree: int | None = None) -> SymFunc:
    return basis_element("h", (n,) if n else (), degree if degree is not None else n)


def power_sum(n: int, degree: int | None = None) -> SymFunc:
    return basis_element("p", (n,) if n else (), degree if degree is not None else n)


def schur(lam: Sequence[int], degree: int | None = None) -> SymFunc:
    return basis_element("s", lam, degree)


def monomial(lam: Sequence[int], degree: int | None = None) -> SymFunc:
    return basis_element("m", lam, degree)


# ---------------------------------------------------------------------------
# direct change-of-basis routes (one homogeneous component at a time)


@lru_cache(maxsize=None)
def _count01(rows: Partition, cols: Partition) -> int:
    """Number of 0-1 matrices with row sums ``rows`` and column sums ``cols``."""
    if not rows:
        return 0 if cols else 1
    if not cols or cols[0] > len(rows):
        return 0
    a, rest = rows[0], rows[1:]
    if a > len(cols):
        return 0
    groups = sorted(multiplicities(cols).items(), reverse=True)
    total = 0

    def choose(gi: int, need: int, factor: int, newcols: list[int]) -> None:
        nonlocal total
        if gi == len(groups):
            if need == 0:
                total += factor * _count01(rest, as_partition(newcols))
            return
        value, mult = groups[gi]
        for t in range(min(mult, need) + 1):
            choose(gi + 1, need - t, factor * comb(mult, t), newcols + [value - 1] * t + [value] * (mult - t))

    choose(0, a, 1, [])
    return total


@lru_cache(maxsize=None)
def _e_in_m(lam: Partition, max_len: int | None = None) -> dict[Partition, int]:
    n = sum(lam)
    bound = n if max_len is None else max_len
    out = {}
    for mu in partitions_in_box(n, bound, len(lam)):
        c = _count01(lam, mu)
        if c:
            out[mu] = c
    return out


@lru_cache(maxsize=None)
def _s_in_m(lam: Partition, max_len: int | None = None) -> dict[Partition, int]:
    n = sum(lam)
    bound = n if max_len is None else max_len
    out = {}
    for mu in partitions_in_box(n, bound, lam[0] if lam else 0):
        c = kostka(lam, mu)
        if c:
            out[mu] = c
    return out


@lru_cache(maxsize=None)
def _h_in_s(mu: Partition) -> dict[Partition, int]:
    out = {}
    for lam in partitions_of(sum(mu)):
        c = kostka(lam, mu)
        if c:
            out[lam] = c
    return out


@lru_cache(maxsize=None)
def _e_in_s(mu: Partition) -> dict[Partition, int]:
    return {conjugate(lam): c for lam, c in _h_in_s(mu).items()}


@lru_cache(maxsize=None)
def _jacobi_trudi(lam: Partition) -> dict[Partition, int]:
    """det[g_{lam_i - i + j}] expanded as a sum of products of generators g_k.

    Rows are expanded one at a time; the state is the set of columns used so
    far, and the permutation sign is tracked through inversions.
    """
    size = len(lam)
    states: dict[int, dict[Partition, int]] = {0: {(): 1}}
    for i in range(size):
        nxt: dict[int, dict[Partition, int]] = defaultdict(dict)
        for mask, poly in states.items():
            for j in range(size):
                if mask >> j & 1:
                    continue
                k = lam[i] - i + j
                if k < 0:
                    continue
                sign = -1 if bin(mask >> (j + 1)).count("1") % 2 else 1
                target = nxt[mask | 1 << j]
                for key, c in poly.items():
                    nk = key if k == 0 else as_partition(key + (k,))
                    v = target.get(nk, 0) + sign * c
                    if v:
                        target[nk] = v
                    else:
                        target.pop(nk, None)
        states = nxt
    return dict(states.get((1 << size) - 1, {})) if size else {(): 1}


def _s_in_h(lam: Partition) -> dict[Partition, int]:
    return _jacobi_trudi(lam)


def _s_in_e(lam: Partition) -> dict[Partition, int]:
    return _jacobi_trudi(conjugate(lam))


def _concat(a: Mapping[Partition, Coeff], b: Mapping[Partition, Coeff], max_degree: int | None = None) -> dict:
    out: dict[Partition, Coeff] = {}
    for k1, v1 in a.items():
        for k2, v2 in b.items():
            if max_degree is not None and sum(k1) + sum(k2) > max_degree:
                continue
            key = as_partition(k1 + k2)
            s = out.get(key, 0) + v1 * v2
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def _multiplicative(generator: Callable[[int], Mapping[Partition, Coeff]]):
    """Extend generator images g_n -> ... to g_lam = prod g_{lam_i}."""

    @lru_cache(maxsize=None)
    def image(lam: Partition) -> dict[Partition, Coeff]:
        if not lam:
            return {(): 1}
        return _clean(_concat(generator(lam[0]), image(lam[1:])))

    return image


@lru_cache(maxsize=None)
def _p_gen_in_e(n: int) -> dict[Partition, Coeff]:
    # Newton: p_n = (-1)^(n-1) n e_n + sum_{i<n} (-1)^(n+i-1) e_{n-i} p_i
    out: dict[Partition, Coeff] = {(n,): (-1) ** (n - 1) * n}
    for i in range(1, n):
        _axpy(out, (-1) ** (n + i - 1), _concat({(n - i,): 1}, _p_gen_in_e(i)))
    return out


@lru_cache(maxsize=None)
def _e_gen_in_p(n: int) -> dict[Partition, Coeff]:
    # Newton: n e_n = sum_{i=1..n} (-1)^(i-1) e_{n-i} p_i
    if n == 0:
        return {(): 1}
    out: dict[Partition, Coeff] = {}
    for i in range(1, n + 1):
        _axpy(out, Fraction((-1) ** (i - 1), n), _concat(_e_gen_in_p(n - i), {(i,): 1}))
    return _clean(out)


@lru_cache(maxsize=None)
def _h_gen_in_p(n: int) -> dict[Partition, Coeff]:
    # n h_n = sum_{i=1..n} p_i h_{n-i}
    if n == 0:
        return {(): 1}
    out: dict[Partition, Coeff] = {}
    for i in range(1, n + 1):
        _axpy(out, Fraction(1, n), _concat(_h_gen_in_p(n - i), {(i,): 1}))
    return _clean(out)


@lru_cache(maxsize=None)
def _p_gen_in_h(n: int) -> dict[Partition, Coeff]:
    # p_n = n h_n - sum_{i<n} p_i h_{n-i}
    out: dict[Partition, Coeff] = {(n,): n}
    for i in range(1, n):
        _axpy(out, -1, _concat(_p_gen_in_h(i), {(n - i,): 1}))
    return out


_p_in_e = _multiplicative(_p_gen_in_e)
_e_in_p = _multiplicative(_e_gen_in_p)
_h_in_p = _multiplicative(_h_gen_in_p)
_p_in_h = _multiplicative(_p_gen_in_h)


def _linear(image: Callable[[Partition], Mapping[Partition, Coeff]]):
    def apply(comp: Mapping[Partition, Coeff]) -> Component:
        out: Component = {}
        for lam, c in comp.items():
            _axpy(out, c, image(lam))
        return out

    return apply


def _peel(image: Callable[[Partition], Mapping[Partition, Coeff]], lead_to_index: Callable[[Partition], Partition]):
    """Invert a map that is unitriangular w.r.t. lexicographic order.

    ``image(lam)`` has leading (lex-largest) term ``mu`` with coefficient 1
    where ``lead_to_index(mu) == lam``.
    """

    def apply(comp: Mapping[Partition, Coeff]) -> Component:
        work = dict(comp)
        out: Component = {}
        while work:
            mu = max(work)
            c = work[mu]
            lam = lead_to_index(mu)
            out[lam] = c
            _axpy(work, -c, image(lam))
            if mu in work:
                raise ArithmeticError(f"leading term {mu} did not cancel")
        return out

    return apply


_EDGES: dict[tuple[str, str], Callable[[Component], Component]] = {
    ("s", "m"): _linear(_s_in_m),
    ("m", "s"): _peel(_s_in_m, lambda mu: mu),
    ("e", "m"): _linear(_e_in_m),
    ("m", "e"): _peel(_e_in_m, conjugate),
    ("s", "h"): _linear(_s_in_h),
    ("h", "s"): _linear(_h_in_s),
    ("s", "e"): _linear(_s_in_e),
    ("e", "s"): _linear(_e_in_s),
    ("e", "p"): _linear(_e_in_p),
    ("p", "e"): _linear(_p_in_e),
    ("h", "p"): _linear(_h_in_p),
    ("p", "h"): _linear(_p_in_h),
}


@lru_cache(maxsize=None)
def conversion_path(source: str, target: str) -> tuple[str, ...]:
    """Shortest chain of direct routes from ``source`` to ``target``."""
    prev = {source: None}
    queue = deque([source])
    while queue:
        b = queue.popleft()
        if b == target:
            break
        for (x, y) in _EDGES:
            if x == b and y not in prev:
                prev[y] = b
                queue.append(y)
    path = [target]
    while path[-1] != source:
        path.append(prev[path[-1]])
    return tuple(reversed(path))


def convert(f: SymFunc, target: str) -> SymFunc:
    """Re-express ``f`` in ``target`` basis (same truncation degree)."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return f
    by_degree: dict[int, Component] = defaultdict(dict)
    for lam, c in f.terms.items():
        by_degree[sum(lam)][lam] = c
    path = conversion_path(f.basis, target)
    out: Component = {}
    for comp in by_degree.values():
        for a, b in zip(path, path[1:]):
            comp = _EDGES[a, b](comp)
        out.update(comp)
    return SymFunc._raw(target, f.degree, _clean(out))


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product truncated at the smaller of the two degrees.

    Computed in the e-basis, where the product of basis elements is the
    concatenation of their partitions; the result is in ``f.basis``.
    """
    degree = min(f.degree, g.degree)
    fe, ge = convert(f, "e"), convert(g, "e")
    prod = SymFunc._raw("e", degree, _clean(_concat(fe.terms, ge.terms, degree)))
    return convert(prod, f.basis)


# ---------------------------------------------------------------------------
# restriction to finitely many variables


@lru_cache(maxsize=None)
def _generator_poly(basis: str, n: int, r: int) -> SymPoly:
    if basis == "e":
        return monomial_symmetric((1,) * n, r)
    if basis == "p":
        return monomial_symmetric((n,), r)
    if basis == "h":
        out = SymPoly(r)
        for mu in partitions_in_box(n, r, n):
            out = out + monomial_symmetric(mu, r)
        return out
    raise ValueError(basis)


@lru_cache(maxsize=None)
def generator_product_poly(basis: str, lam: Partition, r: int) -> SymPoly:
    """prod_i g_{lam_i}(x_1..x_r) for a multiplicative basis g in {e, h, p}."""
    if not lam:
        return SymPoly.constant(r)
    return _generator_poly(basis, lam[0], r) * generator_product_poly(basis, lam[1:], r)


def phi_r(f: SymFunc, r: int) -> SymPoly:
    """Set x_i = 0 for i > r; the result is a symmetric polynomial in r variables.

    Only terms of degree <= ``f.degree`` are meaningful, and the result must
    have integer coefficients.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if f.basis == "s":
        f = convert(f, "m")
    acc: dict = defaultdict(int)
    for lam, c in f.terms.items():
        if f.basis == "m":
            if len(lam) > r:
                continue
            poly = monomial_symmetric(lam, r)
        else:
            if f.basis == "e" and lam and lam[0] > r:
                continue
            poly = generator_product_poly(f.basis, lam, r)
        for mono, v in poly.terms.items():
            acc[mono] += c * v
    return SymPoly(r, {k: v for k, v in acc.items() if v})


# ---------------------------------------------------------------------------
# expansion of symmetric polynomials in elementary symmetric polynomials


class EExpansion:
    """Polynomial in e_1, ..., e_r: ``terms[lam]`` is the coefficient of e_lam.

    Every key satisfies lam_1 <= r.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], int] | None = None):
        self.nvars = nvars
        clean: dict[Partition, int] = {}
        for lam, c in (terms or {}).items():
            lam = as_partition(lam)
            if lam and lam[0] > nvars:
                raise ValueError(f"e_{lam[0]} does not exist in {nvars} variables")
            if c:
                clean[lam] = clean.get(lam, 0) + int(c)
        self.terms = {k: v for k, v in clean.items() if v}

    def __eq__(self, other) -> bool:
        if not isinstance(other, EExpansion):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"EExpansion({self.nvars}, {self.format()})"

    def __mul__(self, other: EExpansion) -> EExpansion:
        if not isinstance(other, EExpansion):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError("variable counts differ")
        # multiply as polynomials in e_1..e_r via exponent vectors
        r = self.nvars
        a = {_e_exponents(lam, r): c for lam, c in self.terms.items()}
        b = {_e_exponents(lam, r): c for lam, c in other.terms.items()}
        acc: dict[tuple[int, ...], int] = defaultdict(int)
        for k1, v1 in a.items():
            for k2, v2 in b.items():
                acc[tuple(x + y for x, y in zip(k1, k2))] += v1 * v2
        out = EExpansion(r)
        out.terms = {_e_partition(k): v for k, v in acc.items() if v}
        return out

    def __pow__(self, n: int) -> EExpansion:
        out = EExpansion(self.nvars, {(): 1})
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def format(self, names: Sequence[str] | None = None) -> str:
        names = names or [f"e{i}" for i in range(1, self.nvars + 1)]
        exps = {_e_exponents(lam, self.nvars): c for lam, c in self.terms.items()}
        return format_e_polynomial(exps, names, self.terms)

    def evaluate(self, values: Sequence[int] | Mapping[int, int]) -> int:
        """Value at e_i = values[i] (mapping keyed 1..r, or a sequence e_1..e_r)."""
        if not isinstance(values, Mapping):
            values = {i + 1: v for i, v in enumerate(values)}
        total = 0
        for lam, c in self.terms.items():
            term = c
            for part in lam:
                term *= values[part]
            total += term
        return total

    def to_polynomial(self) -> SymPoly:
        """Substitute the elementary symmetric polynomials back in."""
        out = SymPoly(self.nvars)
        for lam, c in self.terms.items():
            out = out + generator_product_poly("e", lam, self.nvars) * c
        return out


def _e_exponents(lam: Partition, r: int) -> tuple[int, ...]:
    exps = [0] * r
    for part in lam:
        exps[part - 1] += 1
    return tuple(exps)


def _e_partition(exps: Sequence[int]) -> Partition:
    return tuple(i + 1 for i in range(len(exps) - 1, -1, -1) for _ in range(exps[i]))


def format_e_polynomial(exps: Mapping[tuple[int, ...], int], names, terms=None) -> str:
    if not exps:
        return "0"
    # order by weight sum(i * a_i), then larger partitions first
    def key(k):
        weight = sum((i + 1) * e for i, e in enumerate(k))
        lam = sorted((i + 1 for i, e in enumerate(k) for _ in range(e)), reverse=True)
        return (weight, [-x for x in lam])

    ordered = dict(sorted(exps.items(), key=lambda kv: key(kv[0])))
    return _format_ordered(ordered, names)


def _format_ordered(ordered: Mapping[tuple[int, ...], int], names) -> str:
    parts = []
    for i, (mono, c) in enumerate(ordered.items()):
        factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, mono) if e]
        body = "*".join(factors)
        mag = abs(c)
        text = (body if mag == 1 else f"{mag}*{body}") if body else str(mag)
        if i == 0:
            parts.append(text if c > 0 else f"-{text}")
        else:
            parts.append(("+ " if c > 0 else "- ") + text)
    return " ".join(parts)


@lru_cache(maxsize=None)
def _e_dominant(lam: Partition, r: int) -> dict[Partition, int]:
    # dominant-monomial coefficients of e_lam(x_1..x_r)
    return _e_in_m(lam, r)


def e_expand(p: SymPoly, verify_symmetric: bool = True) -> EExpansion:
    """The unique polynomial g with p = g(e_1, ..., e_r).

    Repeatedly takes the lexicographically largest monomial x^a and subtracts
    c * e_1^(a_1-a_2) ... e_r^(a_r).  Only weakly decreasing exponent vectors
    are tracked: for symmetric input they determine everything else.
    """
    r = p.nvars
    if verify_symmetric and not p.is_symmetric():
        raise ValueError("e_expand needs a symmetric polynomial")
    work: dict[Partition, int] = {trim(k): v for k, v in p.dominant_terms().items()}
    out: dict[Partition, int] = {}
    while work:
        a = max(work)
        c = work[a]
        lam = conjugate(a)
        out[lam] = c
        _axpy(work, -c, _e_dominant(lam, r))
        if a in work:
            raise ArithmeticError(f"leading monomial {a} did not cancel")
    return EExpansion(r, out)


def eval_e_expansion(g: EExpansion, values: Sequence[int] | Mapping[int, int]) -> int:
    return g.evaluate(values)


def expand_as_polynomial(g: EExpansion) -> SymPoly:
    return g.to_polynomial()


# ---------------------------------------------------------------------------
# canonical text


def _fmt_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "0"


def _parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("0", ""):
        return ()
    return as_partition(int(x) for x in text.split(","))


def sorted_terms(terms: Mapping[Partition, Coeff]) -> list[tuple[Partition, Coeff]]:
    """Terms by weight, then reverse-lex within a weight."""
    return sorted(terms.items(), key=lambda kv: (sum(kv[0]), [-x for x in kv[0]]))


def dumps(obj: SymFunc | EExpansion) -> str:
    """Canonical text: a header comment, then ``<basis>:<parts> <coeff>`` per term."""
    if isinstance(obj, SymFunc):
        lines = [f"# symfunc basis={obj.basis} degree={obj.degree}"]
        tag = obj.basis
    elif isinstance(obj, EExpansion):
        lines = [f"# eexpansion nvars={obj.nvars}"]
        tag = "e"
    else:
        raise TypeError(type(obj))
    for lam, c in sorted_terms(obj.terms):
        lines.append(f"{tag}:{_fmt_partition(lam)} {c}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> SymFunc | EExpansion:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("#"):
        raise ValueError("missing header line")
    header = lines[0][1:].split()
    kind = header[0]
    fields = dict(item.split("=", 1) for item in header[1:])
    terms: dict[Partition, Coeff] = {}
    for ln in lines[1:]:
        head, coeff = ln.split()
        tag, parts = head.split(":", 1)
        terms[_parse_partition(parts)] = Fraction(coeff) if "/" in coeff else int(coeff)
    if kind == "symfunc":
        return SymFunc(fields["basis"], int(fields["degree"]), terms)
    if kind == "eexpansion":
        return EExpansion(int(fields["nvars"]), terms)
    raise ValueError(f"unknown record kind {kind!r}")
