"""Finite-N kernels against their six scaling limits.

Runs the convergence harness over a doubling sequence of degrees and prints
the sup-norm error of the rescaled finite-N kernel against each limiting
kernel: the two circle-edge regimes, the inside-disk and outside-disk bulk
regimes, and the two partial-sum limit families.

Usage: python3 scripts/convergence_study.py [--N-list 8,16,32]
"""

import argparse

from mahler.limits import full_report


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--N-list", type=str, default="8,16,32")
    args = ap.parse_args()
    n_list = tuple(int(x) for x in args.N_list.split(","))

    report = full_report(n_list)
    for group, rows in report.items():
        print(f"{group}:")
        for row in rows:
            label = row.get("N", row.get("im"))
            print(f"  {label:>6}  sup error {row['sup_error']:.4e}")


if __name__ == "__main__":
    main()
