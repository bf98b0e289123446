"""Schur expansion of F_k next to the major-index counts, for k up to a bound."""

import argparse

from reidpleth.freelie import F_sym
from reidpleth.partitions import kw_coefficient, partitions_of
from reidpleth.symfunc import convert


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=7)
    ap.add_argument("--variant", choices=["free", "metabelian"], default="free")
    args = ap.parse_args()
    for k in range(1, args.max_k + 1):
        s = convert(F_sym(k, variant=args.variant), "s")
        terms = " + ".join(
            (f"{c}*" if c != 1 else "") + "s" + ",".join(map(str, lam)) for lam, c in sorted(s.terms.items(), reverse=True)
        )
        line = f"F_{k} = {terms}"
        if args.variant == "free":
            agree = all(s.coefficient(lam) == kw_coefficient(lam, k) for lam in partitions_of(k))
            line += f"   (major index counts agree: {agree})"
        print(line)


if __name__ == "__main__":
    main()
