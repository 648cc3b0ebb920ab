"""The symmetry-breaking function phi and the wavenumber-pair classification.

For a coprime pair (k1, k2) the function

    phi(T; k1, k2) = (u^2)_hat_{(k2-1,0),(0,k1)} evaluated at the
                     double bifurcation point (c0(T), kappa0(T))

decides whether asymmetric waves bifurcate: a simple root T0 with a sign
change is a symmetry-breaking bifurcation point.  This module samples
phi over the weak-tension interval, refines its roots, computes its
normalized endpoint limits, and classifies pairs as excluded (by the
divisor or difference criteria), admitting, or undecided.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .coefficients import (
    LIMIT_HIGH_T,
    LIMIT_LOW_T,
    MultiplierContext,
    limit_session,
    numeric_session,
    phi_target_indices,
)
from .errors import CapWhithamError, DomainError
from .symbol import (
    WEAK_TENSION_LIMIT,
    BifurcationPoint,
    WaveNumberPair,
    double_bifurcation,
)

__all__ = [
    "PhiSample",
    "PhiRoot",
    "PairVerdict",
    "phi_eval",
    "phi_curve",
    "phi_limits",
    "phi_root",
    "exclusion_check",
    "pair_scan",
    "STATUS_EXCLUDED_DIVISOR",
    "STATUS_EXCLUDED_DIFFERENCE",
    "STATUS_ADMITS",
    "STATUS_UNDECIDED",
    "STATUS_PASSES",
    "T_MARGIN",
    "DEFAULT_GRID_SIZE",
]

STATUS_EXCLUDED_DIVISOR = "excluded-divisor"
STATUS_EXCLUDED_DIFFERENCE = "excluded-difference"
STATUS_ADMITS = "admits"
STATUS_UNDECIDED = "undecided"
STATUS_PASSES = "passes"

# Margin delta of the sampling interval (delta, 1/3 - delta).
T_MARGIN = 1e-4

# Default number of sample points for root scans.
DEFAULT_GRID_SIZE = 200

# Bracketing refinement tolerance on T0 and the slope-estimate step.
_ROOT_XTOL = 1e-10
_SLOPE_STEP = 1e-5


@dataclass(frozen=True)
class PhiSample:
    """One evaluation of phi with the bifurcation point it used."""

    T: float
    value: float
    bifurcation: BifurcationPoint


@dataclass(frozen=True)
class PhiRoot:
    """A refined root of phi with its bracket and slope estimate.

    ``slope`` is a central finite-difference estimate of the
    T-derivative at the root; a nonzero value signals the local
    monotonicity that makes the root a symmetry-breaking point.
    """

    T0: float
    bracket: tuple[float, float]
    slope: float


@dataclass(frozen=True)
class PairVerdict:
    """Classification of one enumerated (k1, k2) pair.

    ``k1``/``k2`` are the raw enumerated values and ``reduced`` the
    coprime pair actually analysed.  Excluded statuses carry no limits
    or roots; per-pair failures are recorded in ``error`` with status
    undecided rather than aborting a scan.
    """

    k1: int
    k2: int
    reduced: WaveNumberPair
    status: str
    limit_low: float | None = None
    limit_high: float | None = None
    roots: tuple[PhiRoot, ...] = ()
    error: str | None = None


def phi_eval(pair: WaveNumberPair, T: float) -> PhiSample:
    """Evaluate phi(T; k1, k2) at the solved bifurcation point.

    Pairs with k1 = 1 are allowed but flagged with a UserWarning, since
    phi is then provably positive and never yields symmetry breaking;
    positivity is also enforced at runtime.
    """
    if not isinstance(pair, WaveNumberPair):
        pair = WaveNumberPair(*pair)
    if pair.k1 == 1:
        warnings.warn(
            "phi is strictly positive for pairs with k1 = 1; "
            "no symmetry breaking can occur",
            UserWarning,
            stacklevel=2,
        )
    point = double_bifurcation(pair, T)
    session = numeric_session(MultiplierContext.from_bifurcation(point))
    value = session.u2(*phi_target_indices(pair))
    if pair.k1 == 1 and not value > 0.0:
        raise AssertionError(
            f"phi(T={T}; 1, {pair.k2}) = {value} violates the positivity invariant"
        )
    return PhiSample(T=float(T), value=value, bifurcation=point)


def _clustered_grid(grid_size: int, lo: float, hi: float) -> np.ndarray:
    """Grid on [lo, hi] with square-root point clustering at both ends."""
    s = np.linspace(0.0, 1.0, grid_size)
    q = np.where(s < 0.5, 2.0 * s * s, 1.0 - 2.0 * (1.0 - s) ** 2)
    return lo + (hi - lo) * q


def phi_curve(pair: WaveNumberPair, grid_size: int = DEFAULT_GRID_SIZE) -> list[PhiSample]:
    """Sample phi on the endpoint-clustered grid over (delta, 1/3 - delta)."""
    if grid_size < 2:
        raise DomainError("curve needs at least two points", grid_size=grid_size)
    grid = _clustered_grid(grid_size, T_MARGIN, WEAK_TENSION_LIMIT - T_MARGIN)
    return [phi_eval(pair, float(T)) for T in grid]


def phi_limits(pair: WaveNumberPair) -> tuple[float, float]:
    """Normalized limits of phi/ell(k2+1)^M at T -> 0 and T -> 1/3.

    Every term of phi is homogeneous of degree M in the multiplier
    values, so the limits equal the coefficient recursion run with ell
    replaced by its normalized endpoint ratios.
    """
    if not isinstance(pair, WaveNumberPair):
        pair = WaveNumberPair(*pair)
    alpha, beta = phi_target_indices(pair)
    low = limit_session(pair, LIMIT_LOW_T).u2(alpha, beta)
    high = limit_session(pair, LIMIT_HIGH_T).u2(alpha, beta)
    return low, high


def phi_root(
    pair: WaveNumberPair,
    grid_size: int = DEFAULT_GRID_SIZE,
    xtol: float = _ROOT_XTOL,
) -> list[PhiRoot]:
    """Locate all sign-change roots of phi on the sampling interval.

    Samples phi at ``grid_size`` endpoint-clustered points, refines each
    sign change by Brent's method to |dT| <= ``xtol``, and reports a
    central-difference slope estimate per root.  An empty list is a
    valid result.
    """
    if not isinstance(pair, WaveNumberPair):
        pair = WaveNumberPair(*pair)
    if grid_size < 16:
        raise DomainError("root scan needs at least 16 points", grid_size=grid_size)
    if not xtol > 0.0:
        raise DomainError("root tolerance must be positive", xtol=xtol)
    samples = phi_curve(pair, grid_size)
    grid = [s.T for s in samples]
    values = [s.value for s in samples]

    def f(T: float) -> float:
        return phi_eval(pair, T).value

    roots: list[PhiRoot] = []
    for i in range(len(grid) - 1):
        a, b = grid[i], grid[i + 1]
        fa, fb = values[i], values[i + 1]
        if fa == 0.0:
            roots.append(PhiRoot(T0=a, bracket=(a, a), slope=_slope(f, a)))
            continue
        if fa * fb < 0.0:
            t0 = brentq(f, a, b, xtol=xtol)
            roots.append(PhiRoot(T0=float(t0), bracket=(a, b), slope=_slope(f, t0)))
    if values and values[-1] == 0.0:
        t_last = grid[-1]
        roots.append(PhiRoot(T0=t_last, bracket=(t_last, t_last), slope=_slope(f, t_last)))
    return roots


def _slope(f, t0: float) -> float:
    return (f(t0 + _SLOPE_STEP) - f(t0 - _SLOPE_STEP)) / (2.0 * _SLOPE_STEP)


def exclusion_check(k1: int, k2: int) -> str:
    """Apply the two arithmetic exclusion criteria to a raw pair.

    Returns ``excluded-divisor`` when k1 divides k2,
    ``excluded-difference`` when k2 - k1 divides k1, and ``passes``
    otherwise.  Inputs need not be coprime.
    """
    k1, k2 = int(k1), int(k2)
    if not 1 <= k1 < k2:
        raise DomainError("pair must satisfy 1 <= k1 < k2", k1=k1, k2=k2)
    if k2 % k1 == 0:
        return STATUS_EXCLUDED_DIVISOR
    if k1 % (k2 - k1) == 0:
        return STATUS_EXCLUDED_DIFFERENCE
    return STATUS_PASSES


def _classify_pair(item: tuple[int, int, bool, int]) -> PairVerdict:
    """Worker body: classify one surviving pair (never raises)."""
    k1, k2, refine, grid_size = item
    reduced = WaveNumberPair(k1, k2)
    try:
        low, high = phi_limits(reduced)
        if low * high < 0.0:
            return PairVerdict(
                k1=k1, k2=k2, reduced=reduced, status=STATUS_ADMITS,
                limit_low=low, limit_high=high,
            )
        roots: tuple[PhiRoot, ...] = ()
        status = STATUS_UNDECIDED
        if refine:
            roots = tuple(phi_root(reduced, grid_size))
            if roots:
                status = STATUS_ADMITS
        return PairVerdict(
            k1=k1, k2=k2, reduced=reduced, status=status,
            limit_low=low, limit_high=high, roots=roots,
        )
    except (CapWhithamError, ArithmeticError, ValueError) as exc:
        return PairVerdict(
            k1=k1, k2=k2, reduced=reduced, status=STATUS_UNDECIDED,
            error=f"{type(exc).__name__}: {exc}",
        )


def pair_scan(
    k_max: int,
    refine: bool = False,
    grid_size: int = DEFAULT_GRID_SIZE,
    jobs: int = 1,
) -> list[PairVerdict]:
    """Classify every pair 1 <= k1 < k2 <= k_max.

    Excluded pairs are labelled immediately from the arithmetic
    criteria; survivors get their normalized limits, admitting on a sign
    difference.  With ``refine`` set, undecided pairs are additionally
    scanned for roots, and a verified sign change upgrades them to
    admitting.  Work distributes over ``jobs`` processes; the result
    order (sorted by (k1, k2)) and content are independent of
    scheduling.
    """
    if k_max < 3:
        raise DomainError("scan needs k_max >= 3", k_max=k_max)
    verdicts: list[PairVerdict] = []
    work: list[tuple[int, int, bool, int]] = []
    for k1 in range(1, k_max):
        for k2 in range(k1 + 1, k_max + 1):
            status = exclusion_check(k1, k2)
            if status in (STATUS_EXCLUDED_DIVISOR, STATUS_EXCLUDED_DIFFERENCE):
                verdicts.append(
                    PairVerdict(
                        k1=k1, k2=k2, reduced=WaveNumberPair(k1, k2), status=status
                    )
                )
            else:
                work.append((k1, k2, refine, grid_size))
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            classified = list(pool.map(_classify_pair, work))
    else:
        classified = [_classify_pair(item) for item in work]
    verdicts.extend(classified)
    verdicts.sort(key=lambda v: (v.k1, v.k2))
    return verdicts
