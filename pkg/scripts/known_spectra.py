"""Bounded Reidemeister spectrum searches for a few small (r, c)."""

import argparse
import time

from reidpleth.reidemeister import SpectrumConfig, spectrum_search

CASES = [(2, 2, 10, 50), (2, 2, 25, 50), (2, 3, 10, 50), (3, 2, 6, 20), (3, 2, 9, 20), (2, 4, 4, 100)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--variant", choices=["free", "metabelian"], default="free")
    args = ap.parse_args()
    for r, c, bound, cutoff in CASES:
        t = time.perf_counter()
        rep = spectrum_search(SpectrumConfig(r, c, args.variant, bound=bound, cutoff=cutoff, jobs=args.jobs))
        values = " ".join(map(str, rep.achieved)) or "(none)"
        inf = ", infinity" if rep.infinity_achieved else ""
        print(f"r={r} c={c} B={bound} V={cutoff}: {values}{inf}  [{time.perf_counter() - t:.1f}s]")


if __name__ == "__main__":
    main()
