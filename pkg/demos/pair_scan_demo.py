"""Classify every wavenumber pair up to k2 = 8.

Runs the exclusion tests and normalized endpoint limits for each pair,
prints the verdict table, and refines the undecided pairs with a root
scan.  (2, 5) is the smallest pair whose limits change sign.
"""

import warnings

from capwhitham import pair_scan


def main():
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        verdicts = pair_scan(8, refine=True)

    header = f"{'pair':>8s} {'status':>20s} {'limit T->0':>14s} {'limit T->1/3':>14s} {'roots':>6s}"
    print(header)
    print("-" * len(header))
    for v in verdicts:
        low = "" if v.limit_low is None else f"{v.limit_low:+.3e}"
        high = "" if v.limit_high is None else f"{v.limit_high:+.3e}"
        roots = ", ".join(f"{r.T0:.6f}" for r in v.roots) if v.roots else ""
        print(f"  ({v.k1:2d},{v.k2:2d}) {v.status:>20s} {low:>14s} {high:>14s} {roots:>6s}")

    admitted = [(v.k1, v.k2) for v in verdicts if v.status == "admits"]
    print(f"\npairs admitting symmetry breaking: {admitted}")


if __name__ == "__main__":
    main()
