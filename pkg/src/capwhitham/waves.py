"""Truncated Fourier solver for small-amplitude periodic travelling waves.

A candidate wave splits as u = v + w: the kernel part
v = r1*cos(k1*(x+theta1)) + r2*cos(k2*(x+theta2)) carries the two modal
amplitudes, and the remainder w (supported away from the kernel modes)
solves the fixed-point equation w = L P_W (v+w)^2, where L multiplies
mode k by ell(k) and P_W zeroes the kernel modes.  The four kernel
projections of the residual J(u) = (M_{T,kappa} - c)u + u^2 then reduce,
after division by the known amplitude monomials and sine factor, to a
small nonlinear system G(c, kappa, T) = 0 solved by Newton iteration
with finite-difference Jacobians.

Profiles are stored on the nonnegative half of the spectrum (modes
0..K); the negative modes are the complex conjugates, so every profile
is a real 2*pi-periodic function.  All products are computed alias-free
on a padded grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .coefficients import MultiplierContext, multiplier
from .errors import (
    ConvergenceError,
    DegenerateDirectionError,
    DivergenceError,
    DomainError,
    TruncationError,
)
from .symbol import WaveNumberPair, double_bifurcation, eval_symbol

__all__ = [
    "ModalParameters",
    "WaveProfile",
    "SolverSettings",
    "SolveReport",
    "WSolveResult",
    "synthesize_v",
    "asymmetry_test",
    "solve_w",
    "assemble_profile",
    "inner_products",
    "residual_j_inf",
    "variational_identity",
    "linear_dependence_residual",
    "solve_wave",
    "symmetric_solve",
]


@dataclass(frozen=True)
class ModalParameters:
    """Kernel-mode amplitudes and phases (r1, r2, theta1, theta2).

    The phases live on circles: theta1 matters modulo 2*pi/k1 and theta2
    modulo 2*pi/k2; ``reduced`` maps them into those fundamental domains.
    """

    r1: float
    r2: float
    theta1: float = 0.0
    theta2: float = 0.0

    def __post_init__(self):
        if self.r1 < 0.0 or self.r2 < 0.0:
            raise DomainError("amplitudes must be nonnegative", r1=self.r1, r2=self.r2)

    def reduced(self, pair: WaveNumberPair) -> "ModalParameters":
        return replace(
            self,
            theta1=math.fmod(self.theta1, 2.0 * math.pi / pair.k1),
            theta2=math.fmod(self.theta2, 2.0 * math.pi / pair.k2),
        )


@dataclass(frozen=True, eq=False)
class WaveProfile:
    """A real trigonometric polynomial with its solve metadata.

    ``modes[k]`` for k = 0..K is the coefficient of exp(i*k*x); the
    coefficient of exp(-i*k*x) is its conjugate, so ``mode(-k)`` returns
    that.  ``c``, ``kappa`` and ``T`` are None for bare kernel profiles
    that have not been through a solve.
    """

    modes: np.ndarray
    K: int
    pair: WaveNumberPair
    params: ModalParameters | None = None
    c: float | None = None
    kappa: float | None = None
    T: float | None = None

    def mode(self, k: int) -> complex:
        k = int(k)
        if abs(k) > self.K:
            return 0.0 + 0.0j
        if k >= 0:
            return complex(self.modes[k])
        return complex(np.conj(self.modes[-k]))

    def sample(self, n: int = 1024) -> np.ndarray:
        """Values on the uniform grid x_j = 2*pi*j/n."""
        if n < 2 * self.K + 2:
            raise TruncationError("sample grid too coarse for K", n=n, K=self.K)
        return _to_grid(self.modes, n)


@dataclass(frozen=True)
class SolverSettings:
    """Tolerances and sizes for the wave solvers.

    ``amplitude_cap`` bounds ||v||_inf before attempting the w fixed
    point; the plain iteration additionally stops contracting well below
    the cap when the multiplier values are large (near (2,5) bifurcation
    points the observed radius is about 0.013 per mode amplitude), which
    is when the Newton fallback takes over if ``allow_w_newton`` is set.
    """

    K: int = 64
    tol_w: float = 1e-14
    max_iter_w: int = 200
    tol_newton: float = 1e-12
    max_iter_newton: int = 50
    fd_step_rel: float = 1e-7
    amplitude_cap: float = 0.3
    allow_w_newton: bool = True
    tol_residual_j: float = 1e-10
    tol_orthogonality: float = 1e-12
    tol_lindep: float = 1e-12
    asymmetry_tol: float = 1e-12
    sine_guard: float = 1e-10


@dataclass(frozen=True)
class SolveReport:
    """Outcome of a wave solve.

    ``converged`` is true exactly when all three residual fields are
    below their configured tolerances; ``g_inf`` records the final
    scaled kernel equations, whose attainable floor is limited by the
    division by amplitude monomials rather than by the solution quality.
    """

    converged: bool
    mode: str
    w_method: str
    iterations_w: int
    iterations_newton: int
    residual_J_inf: float
    residual_orthogonality: float
    residual_lindep: float
    g_inf: float
    c: float
    kappa: float
    T: float


@dataclass(frozen=True, eq=False)
class WSolveResult:
    """Solved remainder w with its iteration count and method tag."""

    w: WaveProfile
    iterations: int
    method: str


def _to_grid(modes: np.ndarray, n: int) -> np.ndarray:
    """Evaluate a half-spectrum profile on n uniform grid points."""
    spec = np.zeros(n // 2 + 1, dtype=complex)
    spec[: len(modes)] = modes
    return np.fft.irfft(spec * n, n)


def _from_grid(values: np.ndarray, kmax: int) -> np.ndarray:
    """Read modes 0..kmax off a uniform-grid sampling."""
    return np.fft.rfft(values)[: kmax + 1] / len(values)


def _square_modes(modes: np.ndarray, K: int) -> np.ndarray:
    """Alias-free modes 0..2K of the square of a degree-K profile."""
    n = 4 * K + 4
    g = _to_grid(modes, n)
    return _from_grid(g * g, 2 * K)


def _symbol_values(T: float, kappa: float, kmax: int) -> np.ndarray:
    """Vector of m_T(kappa*k) for k = 0..kmax."""
    out = np.empty(kmax + 1)
    out[0] = 1.0
    for k in range(1, kmax + 1):
        out[k] = eval_symbol(T, kappa * k)
    return out


def _ell_values(ctx: MultiplierContext, K: int) -> np.ndarray:
    """Vector of ell(k) for k = 0..K (kernel modes are exactly zero)."""
    return np.array([multiplier(ctx, k) for k in range(K + 1)])


def synthesize_v(pair: WaveNumberPair, params: ModalParameters, K: int = 64) -> WaveProfile:
    """Build the kernel profile v = r1*cos(k1*(x+theta1)) + r2*cos(k2*(x+theta2)).

    Requires K >= 2*k2 so that the square of v is resolvable on the
    truncation.
    """
    if not isinstance(pair, WaveNumberPair):
        pair = WaveNumberPair(*pair)
    if K < 2 * pair.k2:
        raise TruncationError("truncation must satisfy K >= 2*k2", K=K, k2=pair.k2)
    params = params.reduced(pair)
    modes = np.zeros(K + 1, dtype=complex)
    modes[pair.k1] = 0.5 * params.r1 * np.exp(1j * pair.k1 * params.theta1)
    modes[pair.k2] = 0.5 * params.r2 * np.exp(1j * pair.k2 * params.theta2)
    return WaveProfile(modes=modes, K=K, pair=pair, params=params)


def asymmetry_test(pair: WaveNumberPair, params: ModalParameters, tol: float = 1e-12) -> bool:
    """True iff the kernel profile has no axis of even symmetry.

    The profile is asymmetric exactly when both amplitudes are nonzero
    and theta1 - theta2 is not a multiple of pi/(k1*k2); the modular
    comparison is made to the given tolerance.
    """
    if not isinstance(pair, WaveNumberPair):
        pair = WaveNumberPair(*pair)
    if params.r1 == 0.0 or params.r2 == 0.0:
        return False
    period = math.pi / (pair.k1 * pair.k2)
    d = math.fmod(params.theta1 - params.theta2, period)
    if d < 0.0:
        d += period
    return min(d, period - d) > tol


def solve_w(
    v: WaveProfile,
    c: float,
    kappa: float,
    T: float,
    settings: SolverSettings | None = None,
) -> WSolveResult:
    """Solve the remainder equation w = L P_W (v+w)^2 on the truncation.

    The plain fixed-point iteration runs first (stopping when the
    update norm drops to ``tol_w``); if it diverges and the settings
    allow it, a damped Newton iteration with amplitude continuation
    takes over, tracking the small-solution branch from small
    amplitude.  The returned w is zero exactly on the kernel modes.

    Raises
    ------
    DivergenceError
        If the fixed point iteration grows for ten consecutive steps
        and the Newton fallback is disabled.
    ConvergenceError
        If no small solution is found (in particular past the fold
        where the small branch ceases to exist).
    """
    settings = settings or SolverSettings()
    K = v.K
    pair = v.pair
    vmax = float(np.max(np.abs(_to_grid(v.modes, 4 * K + 4))))
    if vmax > settings.amplitude_cap:
        raise DomainError(
            "kernel amplitude exceeds the contraction cap",
            amplitude=vmax,
            cap=settings.amplitude_cap,
        )
    ctx = MultiplierContext(pair=pair, c=c, kappa=kappa, T=T)
    ell = _ell_values(ctx, K)
    try:
        w_modes, iterations = _solve_w_picard(v.modes, ell, K, settings)
        method = "picard"
    except (DivergenceError, ConvergenceError):
        if not settings.allow_w_newton:
            raise
        w_modes, iterations = _solve_w_newton(v.modes, ell, K, pair, settings)
        method = "newton"
    w = WaveProfile(
        modes=w_modes, K=K, pair=pair, params=v.params, c=c, kappa=kappa, T=T
    )
    return WSolveResult(w=w, iterations=iterations, method=method)


def _fixed_point_image(w_modes: np.ndarray, v_modes: np.ndarray, ell: np.ndarray, K: int) -> np.ndarray:
    """One application of w -> L P_W (v+w)^2."""
    sq = _square_modes(v_modes + w_modes, K)[: K + 1]
    return ell * sq


def _solve_w_picard(
    v_modes: np.ndarray, ell: np.ndarray, K: int, settings: SolverSettings
) -> tuple[np.ndarray, int]:
    """Plain fixed-point iteration from w = 0."""
    w = np.zeros(K + 1, dtype=complex)
    history: list[float] = []
    growth = 0
    prev_delta = math.inf
    for iteration in range(1, settings.max_iter_w + 1):
        # Diverging iterates may overflow; nonfinite deltas are counted
        # as growth below, so silence the transient warnings.
        with np.errstate(over="ignore", invalid="ignore"):
            w_next = _fixed_point_image(w, v_modes, ell, K)
            delta = float(np.max(np.abs(w_next - w)))
        history.append(delta)
        if delta <= settings.tol_w:
            return w_next, iteration
        if not math.isfinite(delta) or delta > prev_delta:
            growth += 1
            if growth >= 10:
                raise DivergenceError(
                    "fixed-point iterate norms grew for 10 consecutive steps",
                    history=history,
                )
        else:
            growth = 0
        prev_delta = delta
        w = w_next
    raise ConvergenceError(
        "fixed point did not reach tolerance",
        iterations=settings.max_iter_w,
        last_delta=history[-1],
        tol=settings.tol_w,
    )


def _free_modes(pair: WaveNumberPair, K: int) -> list[int]:
    return [k for k in range(K + 1) if k not in (pair.k1, pair.k2)]


def _pack(w: np.ndarray, free: list[int]) -> np.ndarray:
    """Real unknown vector [Re w_k (k free), Im w_k (k free, k != 0)]."""
    return np.concatenate([w[free].real, w[free[1:]].imag])


def _unpack(x: np.ndarray, free: list[int], K: int) -> np.ndarray:
    w = np.zeros(K + 1, dtype=complex)
    nf = len(free)
    w[free] = x[:nf]
    w[free[1:]] += 1j * x[nf:]
    return w


def _newton_w_step(
    v_modes: np.ndarray,
    ell: np.ndarray,
    K: int,
    free: list[int],
    w0: np.ndarray,
    settings: SolverSettings,
) -> tuple[np.ndarray, int]:
    """Damped Newton for F(w) = w - L P_W (v+w)^2 from the given start."""
    n = 4 * K + 4
    x = _pack(w0, free)
    dim = len(x)

    def residual(xv: np.ndarray) -> np.ndarray:
        w = _unpack(xv, free, K)
        return _pack(w - _fixed_point_image(w, v_modes, ell, K), free)

    f = residual(x)
    norm = float(np.max(np.abs(f)))
    for iteration in range(1, 61):
        if norm <= settings.tol_w:
            return _unpack(x, free, K), iteration
        w = _unpack(x, free, K)
        u_grid = _to_grid(v_modes + w, n)
        jac = np.empty((dim, dim))
        for j in range(dim):
            basis = np.zeros(dim)
            basis[j] = 1.0
            delta = _unpack(basis, free, K)
            prod = _from_grid(u_grid * _to_grid(delta, n), K)
            jac[:, j] = basis - _pack(2.0 * ell * prod, free)
        try:
            step = np.linalg.solve(jac, -f)
        except np.linalg.LinAlgError as exc:
            raise ConvergenceError("singular w-Jacobian", iteration=iteration) from exc
        t = 1.0
        while True:
            f_try = residual(x + t * step)
            norm_try = float(np.max(np.abs(f_try)))
            if math.isfinite(norm_try) and norm_try <= (1.0 - 0.25 * t) * norm:
                break
            t *= 0.5
            if t < 1e-6:
                raise ConvergenceError(
                    "w-Newton line search failed (no nearby small solution)",
                    residual=norm,
                )
        x = x + t * step
        f = f_try
        norm = norm_try
    raise ConvergenceError("w-Newton did not converge", residual=norm)


def _solve_w_newton(
    v_modes: np.ndarray,
    ell: np.ndarray,
    K: int,
    pair: WaveNumberPair,
    settings: SolverSettings,
) -> tuple[np.ndarray, int]:
    """Newton solve of the w equation with continuation in amplitude.

    Scales the kernel profile by s and climbs s -> 1, warm-starting each
    stage from the last solved w; raises with diagnostics when the
    small-solution branch folds before full amplitude.
    """
    free = _free_modes(pair, K)
    w = np.zeros(K + 1, dtype=complex)
    total_iterations = 0
    s_done = 0.0
    ds = 1.0
    while s_done < 1.0:
        s = min(1.0, s_done + ds)
        try:
            w_new, iterations = _newton_w_step(
                s * v_modes, ell, K, free, w, settings
            )
        except ConvergenceError:
            ds *= 0.5
            if ds < 1.0 / 512.0:
                raise ConvergenceError(
                    "small-solution branch lost before full amplitude "
                    "(fold in the w equation)",
                    amplitude_fraction=s_done,
                ) from None
            continue
        total_iterations += iterations
        w = w_new
        s_done = s
        ds = min(1.5 * ds, 1.0)
    return w, total_iterations


def assemble_profile(v: WaveProfile, w: WaveProfile, c: float, kappa: float, T: float) -> WaveProfile:
    """Combine kernel and remainder parts into the full profile u = v + w."""
    return WaveProfile(
        modes=v.modes + w.modes,
        K=v.K,
        pair=v.pair,
        params=v.params,
        c=c,
        kappa=kappa,
        T=T,
    )


def _j_modes(profile: WaveProfile) -> np.ndarray:
    """Alias-free modes 0..2K of J(u) = (M_{T,kappa} - c)u + u^2."""
    if profile.c is None or profile.kappa is None or profile.T is None:
        raise DomainError("profile carries no (c, kappa, T) metadata")
    K = profile.K
    j = _square_modes(profile.modes, K).astype(complex)
    m = _symbol_values(profile.T, profile.kappa, K)
    j[: K + 1] += (m - profile.c) * profile.modes
    return j


def residual_j_inf(profile: WaveProfile) -> float:
    """Sup over resolved modes 0..K of |J(u)_k|."""
    j = _j_modes(profile)
    return float(np.max(np.abs(j[: profile.K + 1])))


def inner_products(profile: WaveProfile) -> tuple[float, float, float, float]:
    """Kernel projections of I = J(u) in the (1/2pi) integral convention.

    Returns (<I, v1_cos>, <I, v2_cos>, <I, v1_sin>, <I, v2_sin>) where
    v1_cos = cos(k1*(x+theta1)) and so on with the profile's phases.
    """
    if profile.params is None:
        raise DomainError("profile carries no modal parameters")
    j = _j_modes(profile)
    k1, k2 = profile.pair.k1, profile.pair.k2
    th1, th2 = profile.params.theta1, profile.params.theta2
    z1 = j[k1] * np.exp(-1j * k1 * th1)
    z2 = j[k2] * np.exp(-1j * k2 * th2)
    return (float(z1.real), float(z2.real), float(-z1.imag), float(-z2.imag))


def variational_identity(profile: WaveProfile) -> tuple[float, float]:
    """Exact orthogonality <J(u), u'> and its natural scale.

    Returns (inner, scale) with inner = <J(u), u'> computed alias-free
    and scale = ||J(u)||_2 * ||u'||_2 in the same convention; the inner
    product vanishes for every real trigonometric polynomial because the
    multiplier is real and even and the cubic term integrates away.
    """
    j = _j_modes(profile)
    K = profile.K
    k = np.arange(K + 1)
    uprime = 1j * k * profile.modes
    inner = float(np.sum(2.0 * (j[: K + 1] * np.conj(uprime)).real[1:]))
    jnorm = math.sqrt(float(abs(j[0]) ** 2 + 2.0 * np.sum(np.abs(j[1:]) ** 2)))
    unorm = math.sqrt(float(2.0 * np.sum(np.abs(uprime[1:]) ** 2)))
    return inner, jnorm * unorm


def linear_dependence_residual(profile: WaveProfile) -> float:
    """The combination k1*r1*<I, v1_sin> + k2*r2*<I, v2_sin>.

    Equal to -<J(u), v'>, so it vanishes (to ten times the w tolerance)
    whenever the remainder equation is solved, for any (c, kappa, T).
    """
    _, _, s1, s2 = inner_products(profile)
    params = profile.params
    pair = profile.pair
    return pair.k1 * params.r1 * s1 + pair.k2 * params.r2 * s2


def _report_from_profile(
    profile: WaveProfile,
    settings: SolverSettings,
    mode: str,
    w_method: str,
    iterations_w: int,
    iterations_newton: int,
    g_inf: float,
) -> SolveReport:
    rj = residual_j_inf(profile)
    orth, _ = variational_identity(profile)
    lindep = linear_dependence_residual(profile)
    converged = (
        rj <= settings.tol_residual_j
        and abs(orth) <= settings.tol_orthogonality
        and abs(lindep) <= settings.tol_lindep
    )
    return SolveReport(
        converged=converged,
        mode=mode,
        w_method=w_method,
        iterations_w=iterations_w,
        iterations_newton=iterations_newton,
        residual_J_inf=rj,
        residual_orthogonality=orth,
        residual_lindep=lindep,
        g_inf=g_inf,
        c=profile.c,
        kappa=profile.kappa,
        T=profile.T,
    )


def _newton_on_parameters(eval_g, x0: np.ndarray, settings: SolverSettings):
    """Newton iteration with finite-difference Jacobian and stagnation stop.

    ``eval_g`` maps a parameter vector to (g, state); iteration stops at
    |g|_inf <= tol_newton, or at the best iterate seen once three
    consecutive steps fail to improve the best by a factor of two (the
    scaled equations bottom out at a rounding floor set by the amplitude
    monomials).  Steps that land outside the evaluable domain are
    halved.  Returns (x, g, state, steps).
    """
    x = np.asarray(x0, dtype=float)
    g, state = eval_g(x)
    ginf = float(np.max(np.abs(g)))
    best = (ginf, x.copy(), g, state)
    stall = 0
    for step_count in range(1, settings.max_iter_newton + 1):
        if ginf <= settings.tol_newton:
            return x, g, state, step_count - 1
        dim = len(x)
        jac = np.empty((dim, dim))
        for jcol in range(dim):
            h = settings.fd_step_rel * max(abs(x[jcol]), 1e-3)
            xp = x.copy()
            xp[jcol] += h
            gp, _ = eval_g(xp)
            jac[:, jcol] = (gp - g) / h
        try:
            delta = np.linalg.solve(jac, -g)
        except np.linalg.LinAlgError as exc:
            raise ConvergenceError(
                "singular parameter Jacobian", step=step_count
            ) from exc
        scale = 1.0
        for _ in range(11):
            try:
                g_try, state_try = eval_g(x + scale * delta)
            except (DomainError, ConvergenceError):
                scale *= 0.5
                continue
            if np.all(np.isfinite(g_try)):
                break
            scale *= 0.5
        else:
            raise ConvergenceError(
                "Newton step left the evaluable domain",
                step=step_count,
                residual=ginf,
            )
        x = x + scale * delta
        g, state = g_try, state_try
        ginf = float(np.max(np.abs(g)))
        if ginf < 0.5 * best[0]:
            stall = 0
        else:
            stall += 1
        if ginf < best[0]:
            best = (ginf, x.copy(), g, state)
        if stall >= 3:
            _, xb, gb, sb = best
            return xb, gb, sb, step_count
    raise ConvergenceError(
        "Newton did not converge or stagnate within the step budget",
        steps=settings.max_iter_newton,
        residual=float(best[0]),
    )


def solve_wave(
    pair: WaveNumberPair,
    params: ModalParameters,
    T_init: float,
    settings: SolverSettings | None = None,
) -> tuple[WaveProfile, SolveReport]:
    """Construct a small-amplitude wave by Newton on (c, kappa, T).

    For genuinely asymmetric parameters the three scaled kernel
    equations g1 = <I,v1_cos>/r1, g2 = <I,v2_cos>/r2 and
    g3 = <I,v1_sin>/(r1^(k2-1) r2^k1 sin(k1 k2 (theta1-theta2)))
    are driven to zero from the bifurcation point at T_init, re-solving
    the remainder equation at every evaluation.  Symmetric parameters
    route to :func:`symmetric_solve` at fixed T.

    Raises
    ------
    DegenerateDirectionError
        If the parameters pass the asymmetry test but the sine factor is
        below the guard; use the symmetric solver.
    ConvergenceError
        If the remainder or parameter iteration fails (in particular for
        amplitudes beyond the small-solution fold).
    """
    if not isinstance(pair, WaveNumberPair):
        pair = WaveNumberPair(*pair)
    settings = settings or SolverSettings()
    params = params.reduced(pair)
    if params.r1 == 0.0 and params.r2 == 0.0:
        return _trivial_solution(pair, T_init, settings)
    if not asymmetry_test(pair, params, settings.asymmetry_tol):
        return symmetric_solve(pair, params, T_init, settings)
    k1, k2 = pair.k1, pair.k2
    sine = math.sin(k1 * k2 * (params.theta1 - params.theta2))
    if abs(sine) < settings.sine_guard:
        raise DegenerateDirectionError(
            "sine factor numerically zero; use the symmetric solver",
            sine=sine,
        )
    v = synthesize_v(pair, params, settings.K)
    point = double_bifurcation(pair, T_init)
    monomial = params.r1 ** (k2 - 1) * params.r2**k1 * sine

    def eval_g(x: np.ndarray):
        c, kappa, T = x
        result = solve_w(v, c, kappa, T, settings)
        profile = assemble_profile(v, result.w, c, kappa, T)
        c1, c2, s1, _ = inner_products(profile)
        g = np.array([c1 / params.r1, c2 / params.r2, s1 / monomial])
        return g, (profile, result)

    x0 = np.array([point.c0, point.kappa0, float(T_init)])
    x, g, (profile, wres), steps = _newton_on_parameters(eval_g, x0, settings)
    report = _report_from_profile(
        profile,
        settings,
        mode="asymmetric",
        w_method=wres.method,
        iterations_w=wres.iterations,
        iterations_newton=steps,
        g_inf=float(np.max(np.abs(g))),
    )
    return profile, report


def _trivial_solution(
    pair: WaveNumberPair, T: float, settings: SolverSettings
) -> tuple[WaveProfile, SolveReport]:
    """The zero wave at the bifurcation point itself (r1 = r2 = 0)."""
    point = double_bifurcation(pair, T)
    profile = WaveProfile(
        modes=np.zeros(settings.K + 1, dtype=complex),
        K=settings.K,
        pair=pair,
        params=ModalParameters(0.0, 0.0),
        c=point.c0,
        kappa=point.kappa0,
        T=float(T),
    )
    report = _report_from_profile(
        profile, settings, mode="trivial", w_method="none",
        iterations_w=0, iterations_newton=0, g_inf=0.0,
    )
    return profile, report


def symmetric_solve(
    pair: WaveNumberPair,
    params: ModalParameters,
    T: float,
    settings: SolverSettings | None = None,
) -> tuple[WaveProfile, SolveReport]:
    """Solve for a symmetric wave at fixed T.

    Bimodal symmetric parameters (both amplitudes positive, phase
    difference on the symmetric lattice) give a two-variable Newton on
    (c, kappa); the sine-factored equations are verified to vanish
    rather than solved.  Unimodal parameters leave the period scaling
    free, so kappa is frozen at the bifurcation value and Newton runs on
    the wave speed alone.
    """
    if not isinstance(pair, WaveNumberPair):
        pair = WaveNumberPair(*pair)
    settings = settings or SolverSettings()
    params = params.reduced(pair)
    if asymmetry_test(pair, params, settings.asymmetry_tol):
        raise DomainError("parameters are asymmetric; use solve_wave")
    if params.r1 == 0.0 and params.r2 == 0.0:
        return _trivial_solution(pair, T, settings)
    v = synthesize_v(pair, params, settings.K)
    point = double_bifurcation(pair, T)
    bimodal = params.r1 > 0.0 and params.r2 > 0.0

    if bimodal:
        def eval_g(x: np.ndarray):
            c, kappa = x
            result = solve_w(v, c, kappa, T, settings)
            profile = assemble_profile(v, result.w, c, kappa, T)
            c1, c2, _, _ = inner_products(profile)
            g = np.array([c1 / params.r1, c2 / params.r2])
            return g, (profile, result)

        x0 = np.array([point.c0, point.kappa0])
        mode = "symmetric"
    else:
        kappa0 = point.kappa0
        divisor = params.r1 if params.r1 > 0.0 else params.r2
        index = 0 if params.r1 > 0.0 else 1

        def eval_g(x: np.ndarray):
            (c,) = x
            result = solve_w(v, c, kappa0, T, settings)
            profile = assemble_profile(v, result.w, c, kappa0, T)
            projections = inner_products(profile)
            g = np.array([projections[index] / divisor])
            return g, (profile, result)

        x0 = np.array([point.c0])
        mode = "unimodal"

    x, g, (profile, wres), steps = _newton_on_parameters(eval_g, x0, settings)
    report = _report_from_profile(
        profile,
        settings,
        mode=mode,
        w_method=wres.method,
        iterations_w=wres.iterations,
        iterations_newton=steps,
        g_inf=float(np.max(np.abs(g))),
    )
    return profile, report
