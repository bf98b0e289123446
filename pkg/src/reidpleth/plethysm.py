"""Plethysm f[g] by two independent routes, plus products over monomial multisets.

The production route works in the power-sum basis, where plethysm is a ring
map in the outer argument and p_n[g] just multiplies every part of every
p_mu in g by n.  The substitution route reads g (restricted to r variables)
as a multiset of monomials and evaluates f on it directly through its
e-expansion.  The second is slow and exists to check the first.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .partitions import Partition, as_partition, partitions_of
from .polys import SymPoly, elementary_of_multiset, monomial_multiset, one_minus_product
from .symfunc import SymFunc, _concat, _clean, convert, phi_r, schur


def _scale_partition(n: int, mu: Partition) -> Partition:
    return tuple(n * part for part in mu)


def plethysm(f: SymFunc, g: SymFunc, degree: int | None = None, basis: str = "s") -> SymFunc:
    """f[g] truncated at ``degree`` (default ``f.degree * g.degree``), in ``basis``.

    Raises ArithmeticError if f and g are integral but the result is not;
    that would mean a bug, since plethysm preserves integrality.
    """
    if degree is None:
        degree = f.degree * g.degree
    fp = convert(f, "p")
    gp = convert(g, "p")

    @lru_cache(maxsize=None)
    def p_of_g(n: int) -> dict:
        return {
            _scale_partition(n, mu): c for mu, c in gp.terms.items() if n * sum(mu) <= degree
        }

    @lru_cache(maxsize=None)
    def p_lambda_of_g(lam: Partition) -> dict:
        if not lam:
            return {(): 1}
        return _clean(_concat(p_of_g(lam[0]), p_lambda_of_g(lam[1:]), degree))

    acc: dict[Partition, Fraction] = {}
    for lam, c in fp.terms.items():
        for mu, v in p_lambda_of_g(lam).items():
            s = acc.get(mu, 0) + c * v
            if s:
                acc[mu] = s
            else:
                acc.pop(mu, None)
    result = convert(SymFunc._raw("p", degree, _clean(acc)), basis)
    if basis != "p" and any(isinstance(c, Fraction) for c in result.terms.values()):
        if f.is_integral() and g.is_integral():
            raise ArithmeticError("plethysm of integral functions produced a fraction")
    return result


def plethysm_substitution_oracle(f: SymFunc, g: SymFunc, r: int, degree: int | None = None) -> SymPoly:
    """phi_r(f[g]) truncated at ``degree``, by substituting monomials into f.

    Only the r-variable part of g is used.  That suffices: a monomial of g
    involving some x_j with j > r only feeds into monomials of f[g] that
    also involve x_j, and those all vanish under phi_r.  So
    phi_r(f[g]) = f[phi_r(g)], and f[phi_r(g)] is f evaluated at the finite
    multiset of monomials of phi_r(g) (counted with multiplicity).
    """
    if degree is None:
        degree = f.degree * g.degree
    inner = phi_r(g, r).truncate(degree)
    multiset = monomial_multiset(inner)
    fe = convert(f, "e")
    top = max((lam[0] for lam in fe.terms if lam), default=0)
    elem = elementary_of_multiset(multiset, r, top, degree)

    acc: dict = {}
    for lam, c in fe.terms.items():
        term = SymPoly.constant(r)
        for part in lam:
            term = (term * elem[part]).truncate(degree)
            if not term:
                break
        for mono, v in term.terms.items():
            acc[mono] = acc.get(mono, 0) + c * v
    return SymPoly(r, {k: v for k, v in acc.items() if v})


def alternating_e_series(g: SymFunc, r: int) -> SymPoly:
    """sum_i (-1)^i phi_r(e_i[g]), computed as prod over the monomials x^a of phi_r(g) of (1 - x^a).

    g must have a non-negative integral monomial expansion, so that phi_r(g)
    is a finite multiset of monomials; the series then stops at i = its size.
    """
    return one_minus_product(monomial_multiset(phi_r(g, r)), r)


def alternating_e_series_partial(g: SymFunc, r: int, max_index: int) -> SymPoly:
    """sum_{i <= max_index} (-1)^i phi_r(e_i[g]) through the plethysm engine."""
    out = SymPoly.constant(r)
    gdeg = max(g.degrees(), default=0)
    for i in range(1, max_index + 1):
        e_i = SymFunc("e", i, {(i,): 1})
        term = phi_r(plethysm(e_i, g.truncate(gdeg), i * gdeg, basis="p"), r)
        out = out + term * (-1) ** i
    return out


def _newton_alternating(powers, max_index: int, one, zero):
    # i e_i = sum_{j=1..i} (-1)^(j-1) e_{i-j} p_j; division is exact because e_i is integral
    es = [one]
    total = one
    for i in range(1, max_index + 1):
        acc = zero
        for j in range(1, i + 1):
            t = es[i - j] * powers[j]
            acc = acc + t if j % 2 else acc - t
        if isinstance(acc, SymPoly):
            e_i = SymPoly._raw(acc.nvars, {m: c // i for m, c in acc.terms.items()})
        else:
            e_i = acc // i
        es.append(e_i)
        total = total + e_i if i % 2 == 0 else total - e_i
    return total


def alternating_e_series_newton(g: SymFunc, r: int, max_index: int) -> SymPoly:
    """sum_{i <= max_index} (-1)^i phi_r(e_i[g]) via Newton's identity in r variables.

    p_j[g] restricted to r variables is phi_r(g) with every exponent scaled by
    j, so the e_i[g] can be built without ever forming a symmetric function of
    degree i * deg g.  Much faster than the engine when i is large.
    """
    base = phi_r(g, r)
    powers = [None] + [
        SymPoly._raw(r, {tuple(j * a for a in m): c for m, c in base.terms.items()})
        for j in range(1, max_index + 1)
    ]
    return _newton_alternating(powers, max_index, SymPoly.constant(r), SymPoly(r))


def alternating_e_series_at(g: SymFunc, point, max_index: int) -> int:
    """The same sum as :func:`alternating_e_series_newton`, evaluated at an integer point."""
    base = phi_r(g, len(point))
    powers = [None] + [base.evaluate([x**j for x in point]) for j in range(1, max_index + 1)]
    return _newton_alternating(powers, max_index, 1, 0)


# ---------------------------------------------------------------------------
# the closed rule for s_{1,1}[s_{k-1,1}], kept as a cross-check


def cry_coefficient(nu: Partition, k: int, parity: str = "even") -> int:
    """Coefficient of s_nu in s_{1,1}[s_{k-1,1}] according to the closed rule.

    ``parity`` picks the condition on m/2 + p for q + p in {2k-2, 2k}:
    "even" is the rule as usually quoted; "odd" is the corrected form that
    matches direct computation.
    """
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    if sum(nu) != 2 * k:
        return 0
    if len(nu) < 2 or nu[1] < 2:
        m = len(nu) - 1
        return 1 if 1 <= m <= 2 * k - 1 and m == 2 else 0
    q, p, rest = nu[0], nu[1], nu[2:]
    if any(part > 2 for part in rest):
        return 0
    m = rest.count(1)
    if q + p == 2 * k - 1:
        return 1
    if q + p in (2 * k - 2, 2 * k) and m % 2 == 0:
        want = 0 if parity == "even" else 1
        return 1 if (m // 2 + p) % 2 == want else 0
    return 0


def cry_expansion(k: int, parity: str = "even") -> SymFunc:
    """s-basis expansion of s_{1,1}[s_{k-1,1}] built from the closed rule."""
    if k < 2:
        raise ValueError("k must be at least 2")
    terms = {nu: cry_coefficient(nu, k, parity) for nu in partitions_of(2 * k)}
    return SymFunc("s", 2 * k, terms)


def cry_ground_truth(k: int) -> SymFunc:
    return plethysm(schur((1, 1)), schur((k - 1, 1)), 2 * k, basis="s")


def discrepancy(a: SymFunc, b: SymFunc) -> dict[Partition, tuple]:
    """Partitions where a and b (compared in a's basis) differ, with both coefficients."""
    b = convert(b, a.basis)
    keys = set(a.terms) | set(b.terms)
    return {
        lam: (a.coefficient(lam), b.coefficient(lam))
        for lam in sorted(keys, reverse=True)
        if a.coefficient(lam) != b.coefficient(lam)
    }
