"""Locate the symmetry-breaking tension of the (2, 5) pair.

Samples phi(T; 2, 5) across the weak-tension range, prints its endpoint
limits and its unique sign change, and writes an SVG of the curve next
to this script.
"""

from pathlib import Path

from capwhitham import WaveNumberPair, phi_curve, phi_limits, phi_root
from capwhitham import svg


def main():
    pair = WaveNumberPair(2, 5)

    low, high = phi_limits(pair)
    print(f"normalized endpoint limits of phi(T; 2, 5):")
    print(f"  T -> 0:   {low:+.12f}")
    print(f"  T -> 1/3: {high:+.6f}")
    print("opposite signs, so a root exists in between.\n")

    roots = phi_root(pair)
    for root in roots:
        print(f"sign change: T0 = {root.T0:.12f}")
        print(f"  bracket        [{root.bracket[0]:.6f}, {root.bracket[1]:.6f}]")
        print(f"  local slope    {root.slope:.4g}")

    samples = phi_curve(pair, grid_size=160)
    negative = sum(1 for s in samples if s.value < 0.0)
    print(f"\ncurve sample: {len(samples)} points, {negative} negative, "
          f"{len(samples) - negative} positive")

    out = Path(__file__).parent / "symmetry_breaking_curve.svg"
    plot = svg.line_plot(
        [(s.T, s.value) for s in samples],
        xlabel="T",
        ylabel="phi(T; 2, 5)",
        hline=0.0,
    )
    out.write_text(plot)
    print(f"curve written to {out}")


if __name__ == "__main__":
    main()
