"""Compare both parity readings of the closed rule for s_{1,1}[s_{k-1,1}] with direct plethysm."""

import argparse

from reidpleth.plethysm import cry_expansion, cry_ground_truth, discrepancy


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=6)
    args = ap.parse_args()
    for k in range(2, args.max_k + 1):
        truth = cry_ground_truth(k)
        for parity in ("even", "odd"):
            diff = discrepancy(cry_expansion(k, parity), truth)
            shown = ", ".join(f"s{','.join(map(str, nu))}: rule {a} vs {b}" for nu, (a, b) in diff.items())
            print(f"k={k} {parity:4s} {'ok' if not diff else shown}")


if __name__ == "__main__":
    main()
