"""Exact symbolic expansion of the symmetry-breaking coefficient.

Expands phi(T; 2, 5) into its integer-coefficient multiplier monomials,
prints the closed form, and cross-checks a numeric evaluation of the
polynomial against the coefficient recursion at one tension.
"""

from capwhitham import (
    MultiplierContext,
    WaveNumberPair,
    double_bifurcation,
    expand_symbolic,
    expansion_size,
    numeric_session,
    phi_target_indices,
)


def main():
    pair = WaveNumberPair(2, 5)
    expansion = expand_symbolic(pair)
    print(f"phi(T; {pair.k1}, {pair.k2}) = 2^-{expansion.prefactor_exponent} * [")
    for mono in expansion.monomials:
        term = " ".join(f"l{k}" for k in mono.factors)
        print(f"  {mono.coeff:+5d} {term}")
    print("]")
    print(f"monomial count (with multiplicity) N = {expansion.coefficient_total}")
    print(f"multiplier factors per monomial  M = {expansion.factors_per_monomial}")

    print("\npredicted sizes for other pairs (no expansion needed):")
    for k1, k2 in ((1, 3), (2, 5), (3, 7), (4, 9)):
        N, M = expansion_size(WaveNumberPair(k1, k2))
        print(f"  ({k1}, {k2}): N = {N:>10d}, M = {M}")

    T = 0.1215
    point = double_bifurcation(pair, T)
    ctx = MultiplierContext.from_bifurcation(point)
    poly = expansion.evaluate(ctx.ell) / 2.0**expansion.prefactor_exponent
    alpha, beta = phi_target_indices(pair)
    direct = numeric_session(ctx).u2(alpha, beta)
    print(f"\nnumeric check at T = {T}:")
    print(f"  polynomial evaluation: {poly:.12f}")
    print(f"  direct recursion:      {direct:.12f}")
    print(f"  relative difference:   {abs(poly - direct) / abs(direct):.2e}")


if __name__ == "__main__":
    main()
