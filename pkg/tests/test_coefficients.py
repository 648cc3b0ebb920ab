"""Tests for the multiplier and the Taylor-Fourier coefficient engine."""

import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

import oracles
from capwhitham import (
    LIMIT_HIGH_T,
    LIMIT_LOW_T,
    DomainError,
    MultiplierContext,
    NearResonanceError,
    SizeGuardError,
    WaveNumberPair,
    coefficient_u,
    coefficient_u2,
    double_bifurcation,
    eval_symbol,
    expand_symbolic,
    expansion_size,
    limit_ratio,
    limit_session,
    multiplier,
    numeric_session,
    phi_target_indices,
)

PAIR_2_5 = WaveNumberPair(2, 5)


def _context(T: float = 0.1215) -> MultiplierContext:
    return MultiplierContext.from_bifurcation(double_bifurcation(PAIR_2_5, T))


def test_multiplier_vanishes_on_kernel_modes():
    ctx = _context()
    for k in (2, 5, -2, -5):
        assert multiplier(ctx, k) == 0.0


def test_multiplier_reference_values():
    ctx = _context()
    c0, kap = oracles.C0_2_5_T01215, oracles.KAPPA0_2_5_T01215
    assert ctx.ell(0) == pytest.approx(1.0 / (c0 - 1.0), rel=1e-12)
    for n in (1, 3, 4, 6, 8, 10):
        expected = 1.0 / (c0 - eval_symbol(0.1215, kap * n))
        assert ctx.ell(n) == pytest.approx(expected, rel=1e-10)


def test_multiplier_sign_pattern():
    # Inside the kernel window the symbol dips below the wave speed, so
    # ell is positive there and negative outside.
    ctx = _context()
    assert ctx.ell(1) < 0.0 and ctx.ell(0) < 0.0
    assert ctx.ell(3) > 0.0 and ctx.ell(4) > 0.0
    for n in (6, 7, 8, 10, 20):
        assert ctx.ell(n) < 0.0


def test_multiplier_even():
    ctx = _context()
    for n in (1, 3, 7):
        assert ctx.ell(-n) == ctx.ell(n)


def test_multiplier_near_resonance_raises():
    point = double_bifurcation(PAIR_2_5, 0.1215)
    # Force the wave speed onto the symbol value of mode 3.
    ctx = MultiplierContext(
        pair=PAIR_2_5,
        c=eval_symbol(0.1215, point.kappa0 * 3),
        kappa=point.kappa0,
        T=0.1215,
    )
    with pytest.raises(NearResonanceError):
        multiplier(ctx, 3)


def test_context_validation():
    with pytest.raises(DomainError):
        MultiplierContext(pair=PAIR_2_5, c=-0.5, kappa=0.8, T=0.1)
    with pytest.raises(DomainError):
        MultiplierContext(pair=PAIR_2_5, c=0.9, kappa=0.0, T=0.1)


def test_base_cases():
    sess = numeric_session(_context())
    for alpha, beta in [
        ((1, 0), (0, 0)),
        ((0, 1), (0, 0)),
        ((0, 0), (1, 0)),
        ((0, 0), (0, 1)),
    ]:
        assert sess.u(alpha, beta) == 0.5
        assert sess.scaled_u(alpha, beta) == 1.0


def test_order_zero_rejected():
    sess = numeric_session(_context())
    with pytest.raises(DomainError):
        sess.u((0, 0), (0, 0))
    with pytest.raises(DomainError):
        sess.u2((1, 0), (0, 0))


def test_second_order_closed_forms():
    ctx = _context()
    sess = numeric_session(ctx)
    # u_hat at ((2,0),(0,0)): wavenumber 4, one splitting 0.25.
    assert sess.u((2, 0), (0, 0)) == pytest.approx(ctx.ell(4) / 4.0, rel=1e-14)
    # u_hat at ((1,0),(0,1)): wavenumber -3, two splittings.
    assert sess.u((1, 0), (0, 1)) == pytest.approx(ctx.ell(3) / 2.0, rel=1e-14)
    # u_hat at ((1,0),(1,0)): wavenumber 0.
    assert sess.u((1, 0), (1, 0)) == pytest.approx(ctx.ell(0) / 2.0, rel=1e-14)
    # u_hat at ((1,1),(0,0)): wavenumber 7.
    assert sess.u((1, 1), (0, 0)) == pytest.approx(ctx.ell(7) / 2.0, rel=1e-14)
    # The square without the multiplier.
    assert sess.u2((1, 0), (1, 0)) == pytest.approx(0.5, rel=1e-15)


def test_index_swap_symmetry():
    # Swapping alpha and beta conjugates the wavenumber, and the
    # multiplier is even, so the coefficients agree exactly.
    sess = numeric_session(_context(0.2))
    indices = [
        (a1, a2, b1, b2)
        for a1, a2, b1, b2 in itertools.product(range(6), repeat=4)
        if 1 <= a1 + a2 + b1 + b2 <= 5
    ]
    for a1, a2, b1, b2 in indices:
        assert sess.u((a1, a2), (b1, b2)) == sess.u((b1, b2), (a1, a2))


def test_seven_term_grouping_identity():
    # The square coefficient at ((4,0),(0,2)) splits into exactly seven
    # grouped products of lower coefficients.
    sess = numeric_session(_context())
    u = sess.u
    parts = [
        2.0 * u((3, 0), (0, 2)) * u((1, 0), (0, 0)),
        2.0 * u((2, 0), (0, 2)) * u((2, 0), (0, 0)),
        2.0 * u((1, 0), (0, 2)) * u((3, 0), (0, 0)),
        2.0 * u((0, 0), (0, 2)) * u((4, 0), (0, 0)),
        2.0 * u((4, 0), (0, 1)) * u((0, 0), (0, 1)),
        2.0 * u((3, 0), (0, 1)) * u((1, 0), (0, 1)),
        u((2, 0), (0, 1)) ** 2,
    ]
    # The seven products are of magnitude ~3e5 and cancel down to ~76,
    # so the comparison tolerance scales with the terms, not the result.
    scale = max(abs(p) for p in parts)
    assert abs(sess.u2((4, 0), (0, 2)) - sum(parts)) <= 1e-13 * scale


def test_convenience_wrappers_match_session():
    ctx = _context()
    sess = numeric_session(ctx)
    assert coefficient_u(ctx, (2, 0), (0, 1)) == sess.u((2, 0), (0, 1))
    assert coefficient_u2(ctx, (2, 0), (0, 1)) == sess.u2((2, 0), (0, 1))


def test_phi_target_indices():
    assert phi_target_indices(PAIR_2_5) == ((4, 0), (0, 2))
    assert phi_target_indices(WaveNumberPair(3, 7)) == ((6, 0), (0, 3))


def test_expansion_2_5_exact_monomials():
    expansion = expand_symbolic(PAIR_2_5)
    table = {m.factors: m.coeff for m in expansion.monomials}
    assert table == oracles.MONOMIALS_2_5
    assert expansion.prefactor_exponent == oracles.PREFACTOR_EXPONENT_2_5
    assert expansion.coefficient_total == 630
    assert expansion.factors_per_monomial == 4
    # Monomials arrive lexicographically sorted.
    factors = [m.factors for m in expansion.monomials]
    assert factors == sorted(factors)


def test_expansion_sizes():
    assert expansion_size(PAIR_2_5) == (630, 4)
    assert expansion_size(WaveNumberPair(3, 7)) == (120120, 7)
    assert expansion_size(WaveNumberPair(1, 3)) == (6, 1)
    assert expansion_size(WaveNumberPair(1, 2)) == (2, 0)
    assert expansion_size(WaveNumberPair(5, 9)) == (267711444, 11)


def test_expansion_3_7_consistency():
    expansion = expand_symbolic(WaveNumberPair(3, 7))
    assert expansion.coefficient_total == 120120
    assert expansion.factors_per_monomial == 7
    assert len(expansion.monomials) == 265
    assert sum(m.coeff for m in expansion.monomials) == 120120
    assert all(len(m.factors) == 7 for m in expansion.monomials)


def test_expansion_1_3():
    expansion = expand_symbolic(WaveNumberPair(1, 3))
    assert [(m.factors, m.coeff) for m in expansion.monomials] == [((2,), 6)]
    assert expansion.prefactor_exponent == 3


def test_size_guard():
    with pytest.raises(SizeGuardError) as excinfo:
        expand_symbolic(WaveNumberPair(5, 9))
    assert excinfo.value.context["size"] == 267711444


def test_expansion_evaluate_matches_numeric_recursion():
    ctx = _context(0.17)
    expansion = expand_symbolic(PAIR_2_5)
    via_expansion = expansion.evaluate(ctx.ell) / 2.0**expansion.prefactor_exponent
    sess = numeric_session(ctx)
    via_recursion = sess.u2(*phi_target_indices(PAIR_2_5))
    assert via_expansion == pytest.approx(via_recursion, rel=1e-11)


def test_expansion_evaluate_matches_typed_polynomial():
    ctx = _context()
    expansion = expand_symbolic(PAIR_2_5)
    assert expansion.evaluate(ctx.ell) / 64.0 == pytest.approx(
        oracles.phi_from_monomials(ctx.ell), rel=1e-13
    )


def test_limit_ratio_normalization():
    for endpoint in (LIMIT_LOW_T, LIMIT_HIGH_T):
        assert limit_ratio(PAIR_2_5, endpoint, 6) == pytest.approx(1.0, rel=1e-14)


def test_limit_ratio_rejects_kernel_and_unknown_endpoint():
    with pytest.raises(DomainError):
        limit_ratio(PAIR_2_5, LIMIT_LOW_T, 2)
    with pytest.raises(DomainError):
        limit_ratio(PAIR_2_5, LIMIT_HIGH_T, 5)
    with pytest.raises(DomainError):
        limit_ratio(PAIR_2_5, "T->1/2", 3)


def test_limit_ratio_zero_mode():
    # As T -> 0 the zero mode ratio vanishes; as T -> 1/3 it follows the
    # rational formula g(6)/g(0) with g(m) = -(m^2-4)(m^2-25).
    assert limit_ratio(PAIR_2_5, LIMIT_LOW_T, 0) == 0.0
    assert limit_ratio(PAIR_2_5, LIMIT_HIGH_T, 0) == pytest.approx(
        Fraction(-352, -100), rel=1e-13
    )


def test_limit_ratio_high_T_rational_values():
    def g(m):
        return -(m * m - 4) * (m * m - 25)

    for n in (1, 3, 4, 8, 10):
        assert limit_ratio(PAIR_2_5, LIMIT_HIGH_T, n) == pytest.approx(
            g(6) / g(n), rel=1e-13
        )


def test_high_T_denominator_factorization():
    # m^2 (k1^2 + k2^2) - k1^2 k2^2 - m^4 factors as -(m^2-k1^2)(m^2-k2^2).
    rng = np.random.default_rng(3)
    for _ in range(50):
        k1, k2, m = (int(v) for v in rng.integers(1, 30, size=3))
        lhs = m * m * (k1 * k1 + k2 * k2) - k1 * k1 * k2 * k2 - m**4
        assert lhs == -(m * m - k1 * k1) * (m * m - k2 * k2)


def test_limit_ratio_matches_finite_tension():
    # The endpoint ratios are genuine limits of ell(n)/ell(6).  The zero
    # mode ratio decays like sqrt(T) as T -> 0, so it is still ~2e-3 at
    # T = 1e-6; the nonzero modes are already converged to rounding.
    ctx_low = _context(1e-6)
    assert abs(ctx_low.ell(0) / ctx_low.ell(6)) <= 5e-3
    for n in (1, 3, 4, 8):
        finite = ctx_low.ell(n) / ctx_low.ell(6)
        assert limit_ratio(PAIR_2_5, LIMIT_LOW_T, n) == pytest.approx(finite, rel=1e-6)
    ctx_high = _context(1.0 / 3.0 - 1e-6)
    for n in (0, 1, 3, 4, 8):
        finite = ctx_high.ell(n) / ctx_high.ell(6)
        assert limit_ratio(PAIR_2_5, LIMIT_HIGH_T, n) == pytest.approx(finite, rel=1e-3)


def test_limit_session_matches_symbolic_substitution():
    # Evaluating the exact expansion with the endpoint ratios reproduces
    # the normalized limit computed by the recursion, at both endpoints
    # and for two pairs.
    for pair in (PAIR_2_5, WaveNumberPair(3, 7)):
        expansion = expand_symbolic(pair)
        for endpoint in (LIMIT_LOW_T, LIMIT_HIGH_T):
            sess = limit_session(pair, endpoint)
            target = phi_target_indices(pair)
            via_recursion = sess.u2(*target)
            rho = lambda n: limit_ratio(pair, endpoint, n)
            via_expansion = expansion.evaluate(rho) / 2.0**expansion.prefactor_exponent
            assert via_recursion == pytest.approx(via_expansion, rel=1e-12)


def test_recursion_against_series_squaring_oracle_small():
    # Spot version of the full oracle comparison: total order <= 4.
    ctx = _context(0.2)
    u_oracle, u2_oracle = oracles.series_squaring_oracle(2, 5, ctx.ell, 4)
    sess = numeric_session(ctx)
    for a1, a2, b1, b2 in itertools.product(range(5), repeat=4):
        order = a1 + a2 + b1 + b2
        if not 1 <= order <= 4:
            continue
        engine = sess.u((a1, a2), (b1, b2))
        oracle = u_oracle[a1, a2, b1, b2]
        assert abs(engine - oracle) <= 1e-12 * max(abs(engine), abs(oracle), 1e-3)
        if order >= 2:
            engine2 = sess.u2((a1, a2), (b1, b2))
            oracle2 = u2_oracle[a1, a2, b1, b2]
            assert abs(engine2 - oracle2) <= 1e-12 * max(
                abs(engine2), abs(oracle2), 1e-3
            )


def test_sessions_are_independent_per_context():
    a = numeric_session(_context(0.1))
    b = numeric_session(_context(0.2))
    assert a.u((2, 0), (0, 0)) != b.u((2, 0), (0, 0))
