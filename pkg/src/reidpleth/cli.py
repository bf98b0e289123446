"""Command-line interface.

Exit codes: 0 success, 2 usage error, 3 oracle mismatch, 4 search budget
exceeded.

Symmetric function specs (for ``plethysm``) are ``+``-separated terms, each
an optional integer coefficient followed by one of::

    e<parts>  h<parts>  p<parts>  m<parts>  s<parts>   basis elements, e.g. s3,1
    F<k>      F2<k>                                    free / metabelian series terms
                                                       (a bare F2 is the free term of degree 2)
    1  or  s0                                          the constant 1

Negative coefficient lists must be attached with ``=``: ``--coeffs=-1,3``.
"""

from __future__ import annotations

import argparse
import csv
import io
import re
import sys
from pathlib import Path

from .cache import ExpansionCache
from .freelie import METABELIAN, VARIANTS, F_sym, basis, format_word
from .partitions import chen_dimension, witt_dimension
from .plethysm import plethysm, plethysm_substitution_oracle
from .reidemeister import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    SpectrumConfig,
    format_g_tilde,
    g_rk,
    reidemeister_number,
    spectrum_search,
)
from .symfunc import BASES, SymFunc, dumps, loads, phi_r

EXIT_USAGE = 2
EXIT_ORACLE = 3
EXIT_BUDGET = 4

_TERM = re.compile(r"^(-?\d*)(F2|F|[ehpms])?([\d,]*)$")


class UsageError(ValueError):
    pass


def parse_spec(text: str) -> SymFunc:
    """Parse a symmetric-function spec such as ``2e1``, ``s2,1+h2`` or ``F3``."""
    total: SymFunc | None = None
    for raw in text.replace(" ", "").split("+"):
        m = _TERM.match(raw)
        if not raw or not m:
            raise UsageError(f"cannot parse term {raw!r} in {text!r}")
        coef_text, kind, parts_text = m.groups()
        if kind is None:
            # a bare integer constant such as "1" or "3"
            if parts_text or not coef_text or coef_text == "-":
                raise UsageError(f"cannot parse term {raw!r}")
            term = SymFunc("s", 0, {(): int(coef_text)})
        else:
            coef = int(coef_text) if coef_text not in ("", "-") else (-1 if coef_text == "-" else 1)
            try:
                parts = tuple(int(x) for x in parts_text.split(",")) if parts_text else ()
            except ValueError:
                raise UsageError(f"bad partition in {raw!r}") from None
            if kind == "F2" and not parts:
                # a bare "F2" is the free series term of degree 2
                kind, parts = "F", (2,)
            if kind in ("F", "F2"):
                if len(parts) != 1 or parts[0] < 1:
                    raise UsageError(f"{kind} needs one positive index, got {raw!r}")
                variant = "free" if kind == "F" else METABELIAN
                term = F_sym(parts[0], variant=variant) * coef
            else:
                if parts == (0,):
                    parts = ()
                if any(p < 1 for p in parts) or list(parts) != sorted(parts, reverse=True):
                    raise UsageError(f"not a partition: {parts_text!r}")
                term = SymFunc(kind, sum(parts), {parts: coef})
        if total is None:
            total = term
        else:
            degree = max(total.degree, term.degree)
            total = SymFunc(total.basis, degree, total.terms) + SymFunc(term.basis, degree, term.terms)
    assert total is not None
    return total


def canonical_spec(text: str) -> str:
    return text.replace(" ", "")


# ---------------------------------------------------------------------------
# commands


def cmd_witt(args) -> int:
    if args.r < 1 or args.k < 1:
        raise UsageError("r and k must be positive")
    n = witt_dimension(args.r, args.k)
    if args.metabelian:
        m = args.r if args.k == 1 else chen_dimension(args.r, args.k) if args.r >= 2 else 0
    if args.format == "csv":
        header = "r,k,witt" + (",chen" if args.metabelian else "")
        row = f"{args.r},{args.k},{n}" + (f",{m}" if args.metabelian else "")
        print(header)
        print(row)
    elif args.metabelian:
        print(f"witt: {n}")
        print(f"chen: {m}")
    else:
        print(n)
    return 0


def cmd_basis(args) -> int:
    if args.r < 2 or args.c < 1:
        raise UsageError("basis needs r >= 2 and c >= 1")
    levels = basis(args.r, args.c, args.variant)
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["degree", "index", "word"])
        for k, words in enumerate(levels, start=1):
            for i, w in enumerate(words, start=1):
                writer.writerow([k, i, format_word(w, args.variant)])
        sys.stdout.write(buf.getvalue())
    else:
        for k, words in enumerate(levels, start=1):
            print(f"{k}: " + " ".join(format_word(w, args.variant) for w in words))
    return 0


def cmd_plethysm(args) -> int:
    outer = parse_spec(args.outer)
    inner = parse_spec(args.inner)
    degree = args.degree if args.degree is not None else outer.degree * inner.degree
    if degree < 0:
        raise UsageError("degree must be non-negative")

    def compute() -> str:
        return dumps(plethysm(outer, inner, degree, basis=args.basis))

    if args.cache:
        key = f"pleth:{canonical_spec(args.outer)}:{canonical_spec(args.inner)}:{degree}:{args.basis}"
        text = ExpansionCache(args.cache_dir).get_or_compute(key, compute)
    else:
        text = compute()

    if args.check_oracle:
        result = loads(text)
        r = args.nvars if args.nvars is not None else max(1, min(degree, 4))
        try:
            expected = plethysm_substitution_oracle(outer, inner, r, degree)
        except ValueError as exc:
            raise UsageError(f"oracle not applicable: {exc}") from None
        if phi_r(result, r) != expected:
            print(f"oracle mismatch in {r} variables", file=sys.stderr)
            return EXIT_ORACLE
    sys.stdout.write(text)
    return 0


def cmd_grk(args) -> int:
    if args.r < 2 or args.k < 1:
        raise UsageError("grk needs r >= 2 and k >= 1")
    if args.cache:
        key = f"grk:{args.r}:{args.k}:{args.variant}"
        text = ExpansionCache(args.cache_dir).get_or_compute(
            key, lambda: dumps(g_rk(args.r, args.k, args.variant))
        )
        g = loads(text)
    else:
        g = g_rk(args.r, args.k, args.variant)
    if args.format == "canonical":
        sys.stdout.write(dumps(g))
    elif args.tilde:
        print(format_g_tilde(args.r, args.k, args.variant))
    else:
        print(g.format())
    return 0


def cmd_reidemeister(args) -> int:
    try:
        coeffs = tuple(int(x) for x in args.coeffs.split(","))
    except ValueError:
        raise UsageError(f"bad coefficient list {args.coeffs!r}") from None
    value = reidemeister_number(coeffs, args.c, args.variant, endo=args.endo)
    print("infinity" if value == float("inf") else value)
    return 0


def cmd_spectrum(args) -> int:
    cfg = SpectrumConfig(
        r=args.r,
        c=args.c,
        variant=args.variant,
        bound=args.bound,
        cutoff=args.cutoff,
        jobs=args.jobs,
        budget=args.budget,
    )
    report = spectrum_search(cfg)
    text = report.to_text()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    if args.csv:
        Path(args.csv).write_text(report.to_csv())
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reidpleth",
        description="Symmetric functions, plethysm and Reidemeister numbers of free nilpotent groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("witt", help="dimension of a graded piece of the free (metabelian) Lie algebra")
    p.add_argument("r", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--metabelian", action="store_true", help="also print the metabelian dimension")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_witt)

    p = sub.add_parser("basis", help="list Hall or Chen basis words by degree")
    p.add_argument("r", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--variant", choices=VARIANTS, default="free")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("plethysm", help="expand outer[inner]")
    p.add_argument("outer")
    p.add_argument("inner")
    p.add_argument("--degree", type=int, help="truncation degree (default: product of degrees)")
    p.add_argument("--basis", choices=BASES, default="s")
    p.add_argument("--check-oracle", action="store_true", help="verify against monomial substitution")
    p.add_argument("--nvars", type=int, help="variable count for --check-oracle (default min(D, 4))")
    _add_cache_flags(p)
    p.set_defaults(func=cmd_plethysm)

    p = sub.add_parser("grk", help="print g_{r,k} in e-variables, or in coefficients with --tilde")
    p.add_argument("r", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--variant", choices=VARIANTS, default="free")
    p.add_argument("--tilde", action="store_true", help="rewrite in characteristic-polynomial coefficients a0..a{r-1}")
    p.add_argument("--format", choices=("text", "canonical"), default="text")
    _add_cache_flags(p)
    p.set_defaults(func=cmd_grk)

    p = sub.add_parser("reidemeister", help="Reidemeister number from characteristic-polynomial coefficients")
    p.add_argument("--coeffs", required=True, help="a_0,...,a_{r-1}; use --coeffs=-1,3 for a leading minus")
    p.add_argument("--class", dest="c", type=int, required=True, help="nilpotency class c")
    p.add_argument("--variant", choices=VARIANTS, default="free")
    p.add_argument("--endo", action="store_true", help="allow a_0 other than +-1")
    p.set_defaults(func=cmd_reidemeister)

    p = sub.add_parser("spectrum", help="bounded search of the Reidemeister spectrum")
    p.add_argument("r", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--variant", choices=VARIANTS, default="free")
    p.add_argument("--bound", type=int, default=10, help="max |a_i| for i >= 1")
    p.add_argument("--cutoff", type=int, default=50, help="largest finite value to record")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max number of polynomials to evaluate")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--csv", help="also write value,witness rows here")
    p.set_defaults(func=cmd_spectrum)
    return parser


def _add_cache_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--cache", action="store_true", help="reuse results from the expansion cache")
    p.add_argument("--cache-dir", help="cache directory (default: $REIDPLETH_CACHE or ~/.cache/reidpleth)")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
