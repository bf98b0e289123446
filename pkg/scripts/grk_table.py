"""Print g_rk (in e_i) and its coefficient form for small r and k."""

import argparse

from reidpleth.reidemeister import format_g_tilde, g_rk


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-r", type=int, default=4)
    ap.add_argument("--max-k", type=int, default=2)
    ap.add_argument("--variant", choices=["free", "metabelian"], default="free")
    args = ap.parse_args()
    for k in range(1, args.max_k + 1):
        for r in range(2, args.max_r + 1):
            print(f"g_{r},{k} = {g_rk(r, k, args.variant).format()}")
            print(f"  in a_i:  {format_g_tilde(r, k, args.variant)}")


if __name__ == "__main__":
    main()
