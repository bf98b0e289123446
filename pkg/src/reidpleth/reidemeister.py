"""Reidemeister numbers of automorphisms of free nilpotent (metabelian) groups.

An automorphism of N_{r,c} (or M_{r,c}) is summarised by the characteristic
polynomial x^r + a_{r-1} x^{r-1} + ... + a_0 of its action on the
abelianisation.  Its Reidemeister number is |prod_k gt_{r,k}(a)|, or infinity
when the product vanishes, where gt_{r,k} is the product of (1 - eta(X))
over the degree-k basis words, rewritten first in elementary symmetric
polynomials and then, via Vieta, in the coefficients a_i.

Naming: polynomials in the coefficients use variables a0..a{r-1}, with
a_j the coefficient of x^j.  In a SymPoly over r variables, variable index
j + 1 holds a_j.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .freelie import FREE, basis, check_variant, eta
from .polys import SymPoly, distinct_permutations, format_polynomial, one_minus_product, pad
from .symfunc import EExpansion, e_expand

INF = math.inf
REPORT_VERSION = 1
DEFAULT_BUDGET = 2_000_000


class BudgetExceeded(RuntimeError):
    """The requested search grid is larger than the configured budget."""


@dataclass(frozen=True)
class CharPoly:
    """Monic polynomial x^r + a_{r-1} x^{r-1} + ... + a_0, stored as (a_0, ..., a_{r-1})."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))
        if len(self.coeffs) < 1:
            raise ValueError("need at least one coefficient")

    @property
    def r(self) -> int:
        return len(self.coeffs)

    def is_automorphism(self) -> bool:
        return self.coeffs[0] in (-1, 1)

    def __call__(self, x: int) -> int:
        return sum(a * x**j for j, a in enumerate(self.coeffs)) + x**self.r

    def companion(self) -> list[list[int]]:
        """Companion matrix: an integer matrix with this characteristic polynomial."""
        r = self.r
        mat = [[0] * r for _ in range(r)]
        for i in range(1, r):
            mat[i][i - 1] = 1
        for i in range(r):
            mat[i][r - 1] = -self.coeffs[i]
        return mat


def infty_norm(n: int) -> float | int:
    """|n| for n != 0, infinity for n = 0."""
    return INF if n == 0 else abs(n)


@lru_cache(maxsize=None)
def f_rk(r: int, k: int, variant: str = FREE) -> SymPoly:
    """prod (1 - eta(X)) over the degree-k basis words on r generators."""
    words = basis(r, k, check_variant(variant))[k - 1]
    return one_minus_product([eta(w) for w in words], r)


def eta_orbits(r: int, k: int, variant: str = FREE) -> dict[tuple[int, ...], int]:
    """How often each S_r-orbit of monomials occurs among the eta(X).

    Keys are weakly decreasing exponent vectors of length r.  Raises if the
    multiset is not a union of full orbits, which would mean the basis is
    wrong.
    """
    counts: dict[tuple[int, ...], int] = {}
    for w in basis(r, k, check_variant(variant))[k - 1]:
        mono = pad(eta(w), r)
        counts[mono] = counts.get(mono, 0) + 1
    seen: dict[tuple[int, ...], list[int]] = {}
    for mono, n in counts.items():
        seen.setdefault(tuple(sorted(mono, reverse=True)), []).append(n)
    out = {}
    for lam, mults in seen.items():
        if len(set(mults)) != 1 or len(mults) != len(distinct_permutations(lam)):
            raise ArithmeticError(f"orbit of {lam} is not uniformly covered")
        out[lam] = mults[0]
    return out


@lru_cache(maxsize=None)
def _orbit_factor(lam: tuple[int, ...]) -> EExpansion:
    # prod over the distinct rearrangements a of lam of (1 - x^a)
    return e_expand(one_minus_product(sorted(distinct_permutations(lam)), len(lam)), verify_symmetric=False)


@lru_cache(maxsize=None)
def g_rk(r: int, k: int, variant: str = FREE) -> EExpansion:
    """f_rk written as a polynomial in e_1, ..., e_r.

    f_rk is a product over whole S_r-orbits of monomials; each orbit's
    factor is symmetric on its own, so it is expanded separately and the
    expansions are multiplied.  Equal to ``e_expand(f_rk(r, k, variant))``.
    """
    out = EExpansion(r, {(): 1})
    for lam, n in sorted(eta_orbits(r, k, variant).items()):
        out = out * _orbit_factor(lam) ** n
    return out


@lru_cache(maxsize=None)
def g_tilde(r: int, k: int, variant: str = FREE) -> SymPoly:
    """g_rk after e_i -> (-1)^i a_{r-i}; variable j + 1 is a_j."""
    out: dict[tuple[int, ...], int] = {}
    for lam, c in g_rk(r, k, variant).terms.items():
        exps = [0] * r
        for part in lam:
            exps[r - part] += 1
        key = tuple(exps)
        out[key] = out.get(key, 0) + (-1) ** sum(lam) * c
    return SymPoly(r, out)


def a_names(r: int) -> list[str]:
    return [f"a{j}" for j in range(r)]


def format_g_tilde(r: int, k: int, variant: str = FREE) -> str:
    return format_polynomial(g_tilde(r, k, variant).terms, a_names(r))


def _compiled(r: int, c: int, variant: str) -> list[list[tuple[int, tuple[int, ...]]]]:
    # factors k = 2..c as (coefficient, exponents) lists for fast evaluation
    return [
        [(coef, mono) for mono, coef in g_tilde(r, k, variant).terms.items()]
        for k in range(2, c + 1)
    ]


def _eval_compiled(poly: list[tuple[int, tuple[int, ...]]], a: Sequence[int]) -> int:
    total = 0
    for coef, mono in poly:
        term = coef
        for x, e in zip(a, mono):
            if e:
                term *= x**e
        total += term
    return total


def _product_value(a: Sequence[int], factors) -> int:
    # the degree-1 factor is p(1) = 1 + a_0 + ... + a_{r-1}
    prod = 1 + sum(a)
    if prod == 0:
        return 0
    for poly in factors:
        prod *= _eval_compiled(poly, a)
        if prod == 0:
            return 0
    return prod


def reidemeister_number(p: CharPoly | Sequence[int], c: int, variant: str = FREE, endo: bool = False):
    """R of an automorphism (or, with ``endo``, endomorphism) with characteristic polynomial p.

    Returns a positive int, or ``math.inf``.
    """
    if not isinstance(p, CharPoly):
        p = CharPoly(tuple(p))
    if p.r < 2:
        raise ValueError("need r >= 2")
    if c < 1:
        raise ValueError("need c >= 1")
    if not endo and not p.is_automorphism():
        raise ValueError(f"a_0 = {p.coeffs[0]} is not +-1; pass endo=True for endomorphisms")
    return infty_norm(_product_value(p.coeffs, _compiled(p.r, c, variant)))


def reduction_check(r: int, k: int, variant: str = FREE) -> bool:
    """Dropping every term with e_r from g_rk(r) gives g_rk(r - 1)."""
    if r < 3:
        raise ValueError("reduction_check needs r >= 3")
    kept = {lam: c for lam, c in g_rk(r, k, variant).terms.items() if not lam or lam[0] < r}
    return kept == g_rk(r - 1, k, variant).terms


# ---------------------------------------------------------------------------
# spectrum search


@dataclass(frozen=True)
class SpectrumConfig:
    r: int
    c: int
    variant: str = FREE
    bound: int = 10
    cutoff: int = 50
    jobs: int = 1
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        check_variant(self.variant)
        if self.r < 2 or self.c < 2:
            raise ValueError("spectrum search needs r >= 2 and c >= 2")
        if self.bound < 1 or self.cutoff < 1:
            raise ValueError("bound and cutoff must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be positive")

    @property
    def grid_size(self) -> int:
        return 2 * (2 * self.bound + 1) ** (self.r - 1)


@dataclass
class SpectrumReport:
    r: int
    c: int
    variant: str
    bound: int
    cutoff: int
    evaluated: int
    achieved: tuple[int, ...]
    infinity_achieved: bool
    witnesses: dict[int, tuple[int, ...]] = field(default_factory=dict)
    infinity_witness: tuple[int, ...] | None = None

    DISCLAIMER = (
        "bounded search: values missing here may still occur for larger coefficients"
    )

    def to_text(self) -> str:
        lines = [
            f"reidpleth-spectrum-report: {REPORT_VERSION}",
            f"r: {self.r}",
            f"c: {self.c}",
            f"variant: {self.variant}",
            f"coeff_bound: {self.bound}",
            f"value_cutoff: {self.cutoff}",
            f"evaluated: {self.evaluated}",
            f"infinity_achieved: {str(self.infinity_achieved).lower()}",
            f"infinity_witness: {_fmt_coeffs(self.infinity_witness) if self.infinity_witness else '-'}",
            f"count: {len(self.achieved)}",
            f"values: {' '.join(map(str, self.achieved))}",
            f"note: {self.DISCLAIMER}",
        ]
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        rows = ["value,witness"]
        rows += [f"{v},{_fmt_coeffs(self.witnesses[v])}" for v in self.achieved]
        if self.infinity_witness is not None:
            rows.append(f"inf,{_fmt_coeffs(self.infinity_witness)}")
        return "\n".join(rows) + "\n"

    @classmethod
    def from_text(cls, text: str, csv: str | None = None) -> SpectrumReport:
        fields = dict(line.split(": ", 1) if ": " in line else (line.rstrip(":"), "") for line in text.splitlines() if line)
        if int(fields["reidpleth-spectrum-report"]) != REPORT_VERSION:
            raise ValueError("unsupported report version")
        witnesses = {}
        if csv:
            for row in csv.splitlines()[1:]:
                value, wit = row.split(",")
                if value != "inf":
                    witnesses[int(value)] = _parse_coeffs(wit)
        inf_wit = fields["infinity_witness"]
        return cls(
            r=int(fields["r"]),
            c=int(fields["c"]),
            variant=fields["variant"],
            bound=int(fields["coeff_bound"]),
            cutoff=int(fields["value_cutoff"]),
            evaluated=int(fields["evaluated"]),
            achieved=tuple(int(v) for v in fields["values"].split()),
            infinity_achieved=fields["infinity_achieved"] == "true",
            witnesses=witnesses,
            infinity_witness=None if inf_wit == "-" else _parse_coeffs(inf_wit),
        )


def _fmt_coeffs(coeffs: Sequence[int]) -> str:
    return ";".join(map(str, coeffs))


def _parse_coeffs(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(";"))


def _decode(index: int, r: int, bound: int) -> tuple[int, ...]:
    # canonical order: a_0 in (-1, 1), then a_1..a_{r-1} lexicographically
    width = 2 * bound + 1
    rest = []
    for _ in range(r - 1):
        index, digit = divmod(index, width)
        rest.append(digit - bound)
    a0 = (-1, 1)[index]
    return (a0,) + tuple(reversed(rest))


def _search_shard(args) -> tuple[dict[int, int], int | None]:
    lo, hi, r, bound, cutoff, factors = args
    first: dict[int, int] = {}
    inf_at = None
    for idx in range(lo, hi):
        value = abs(_product_value(_decode(idx, r, bound), factors))
        if value == 0:
            if inf_at is None:
                inf_at = idx
        elif value <= cutoff and value not in first:
            first[value] = idx
    return first, inf_at


def spectrum_search(cfg: SpectrumConfig) -> SpectrumReport:
    """Evaluate R on every automorphism class with |a_i| <= bound and collect values <= cutoff.

    Each witness is the first coefficient tuple in the canonical order that
    attains its value, so the report does not depend on ``jobs``.
    """
    total = cfg.grid_size
    if total > cfg.budget:
        raise BudgetExceeded(f"grid of {total} polynomials exceeds budget {cfg.budget}")
    factors = _compiled(cfg.r, cfg.c, cfg.variant)
    nshards = min(cfg.jobs * 4, total) if cfg.jobs > 1 else 1
    step = -(-total // nshards)
    shards = [
        (lo, min(lo + step, total), cfg.r, cfg.bound, cfg.cutoff, factors)
        for lo in range(0, total, step)
    ]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_search_shard, shards))
    else:
        results = [_search_shard(s) for s in shards]

    first: dict[int, int] = {}
    inf_at = None
    for shard_first, shard_inf in results:
        for value, idx in shard_first.items():
            if value not in first or idx < first[value]:
                first[value] = idx
        if shard_inf is not None and (inf_at is None or shard_inf < inf_at):
            inf_at = shard_inf
    achieved = tuple(sorted(first))
    return SpectrumReport(
        r=cfg.r,
        c=cfg.c,
        variant=cfg.variant,
        bound=cfg.bound,
        cutoff=cfg.cutoff,
        evaluated=total,
        achieved=achieved,
        infinity_achieved=inf_at is not None,
        witnesses={v: _decode(first[v], cfg.r, cfg.bound) for v in achieved},
        infinity_witness=None if inf_at is None else _decode(inf_at, cfg.r, cfg.bound),
    )


def coefficient_grid(r: int, bound: int):
    """All automorphism coefficient tuples in the canonical search order."""
    for a0 in (-1, 1):
        for rest in itertools.product(range(-bound, bound + 1), repeat=r - 1):
            yield (a0,) + rest
