"""Brute-force cross-check: discretized bath + Gaussian Lindblad steady state.

No frequency-domain machinery: the Lorentzian bath is sampled on a uniform
grid, the joint quadrature dynamics is a linear drift plus vacuum diffusion,
and the steady covariance solves the continuous Lyapunov equation. The
system occupation read off the covariance is an independent check on the
correlation integral, and the Hurwitz boundary of the drift matrix is an
independent check on the critical coupling.

Quadrature convention: hbar = 1, vacuum variance 1/2 per quadrature,
basis ordered (x, p, x_1, p_1, ..., x_N, p_N).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_continuous_lyapunov

from .errors import DomainError, InstabilityError, KoscError
from .model import Approx, ModelParams
from .spectral import spectral_density

# default bath-mode damping: small regularizer, 1/50 of the bath linewidth;
# an undamped discrete bath has recurrences and no steady state
EPS_DEFAULT = 0.02

BASIS_DOC = "x, p, then (x_k, p_k) per bath mode in increasing frequency order"


@dataclass(frozen=True)
class BathDiscretization:
    frequencies: np.ndarray  # strictly increasing, symmetric about q
    couplings: np.ndarray    # g_k >= 0, g_k^2 = J(w_k) * grid spacing
    eps: float


@dataclass(frozen=True)
class CovarianceSystem:
    drift: np.ndarray      # (2N+2) x (2N+2) real
    diffusion: np.ndarray  # same shape, symmetric PSD
    basis: str = BASIS_DOC


def discretize_bath(p: ModelParams, n_modes: int, half_width: float,
                    eps: float | None = None) -> BathDiscretization:
    """Uniform grid on [q - half_width, q + half_width], couplings from the
    spectral density times the grid spacing."""
    if not isinstance(n_modes, int) or n_modes < 2:
        raise DomainError("n_modes", "must be an integer >= 2")
    if not (half_width > 0):
        raise DomainError("half_width", "must be > 0")
    w = np.linspace(p.q - half_width, p.q + half_width, n_modes)
    delta = w[1] - w[0]
    g = np.sqrt(np.array([spectral_density(wk, p) for wk in w]) * delta)
    return BathDiscretization(w, g, EPS_DEFAULT if eps is None else float(eps))


def truncated_weight(half_width: float) -> float:
    """Fraction of the Lorentzian spectral weight outside the window."""
    return 1.0 - (2.0 / math.pi) * math.atan(half_width)


def drift_matrix(p: ModelParams, b: BathDiscretization) -> CovarianceSystem:
    """Drift A and vacuum diffusion D of the joint quadrature dynamics.

    Coherent part: oscillator rotation at q, bath rotation at w_k, and a
    position-position coupling with coefficient g_k (this normalization is
    what reproduces the closed-form self-energy; the static limit of the
    bath-eliminated dynamics matches Sigma(0) and the Hurwitz boundary
    matches the critical coupling). RWA instead couples the quadratures in
    the excitation-conserving pattern, whose coherent block is
    skew-symmetric. Dissipation: -gamma on system, -eps on bath, with
    matching vacuum noise so the decoupled steady state is exactly C = I/2.
    """
    n = len(b.frequencies)
    m = 2 * n + 2
    g = p.gamma
    a = np.zeros((m, m))
    d = np.zeros(m)
    a[0, 0] = -g
    a[0, 1] = p.q
    a[1, 0] = -p.q
    a[1, 1] = -g
    d[0] = g
    d[1] = g
    for k in range(n):
        ix, ip = 2 + 2 * k, 3 + 2 * k
        wk = b.frequencies[k]
        gk = b.couplings[k]
        a[ix, ix] = -b.eps
        a[ix, ip] = wk
        a[ip, ix] = -wk
        a[ip, ip] = -b.eps
        d[ix] = b.eps
        d[ip] = b.eps
        if p.approx == Approx.RWA:
            a[0, ip] += gk
            a[1, ix] -= gk
            a[ix, 1] += gk
            a[ip, 0] -= gk
        else:
            a[1, ix] -= gk
            a[ip, 0] -= gk
    return CovarianceSystem(a, np.diag(d))


def max_re_eig(sys: CovarianceSystem) -> float:
    return float(np.linalg.eigvals(sys.drift).real.max())


def steady_covariance(sys: CovarianceSystem) -> np.ndarray:
    """Solve A C + C A^T + D = 0; requires A Hurwitz. The returned C is
    symmetrized and its residual is verified below 1e-10 max-norm."""
    mre = max_re_eig(sys)
    if mre >= 0.0:
        raise InstabilityError(mre)
    c = solve_continuous_lyapunov(sys.drift, -sys.diffusion)
    c = (c + c.T) / 2.0
    resid = np.abs(sys.drift @ c + c @ sys.drift.T + sys.diffusion).max()
    if resid >= 1e-10:
        raise KoscError(f"Lyapunov solve residual {resid:.3e} out of tolerance")
    return c


def oracle_number_density(p: ModelParams, n_modes: int = 400,
                          half_width: float = 10.0,
                          eps: float | None = None) -> float:
    """System occupation <n> = (Var x + Var p - 1)/2 from the steady
    covariance of the discretized model."""
    b = discretize_bath(p, n_modes, half_width, eps=eps)
    c = steady_covariance(drift_matrix(p, b))
    return float((c[0, 0] + c[1, 1] - 1.0) / 2.0)


def hurwitz_threshold(p: ModelParams, n_modes: int = 500,
                      half_width: float = 15.0, eps: float = 0.05,
                      alpha_hi: float | None = None,
                      rtol: float = 1e-3) -> float:
    """Coupling at which the drift matrix loses Hurwitz stability,
    by geometric bisection; independent counterpart of the critical
    coupling. The wider default window matters: a window clipped at zero
    frequency misses negative-frequency spectral weight and biases the
    threshold low at large q."""
    if alpha_hi is None:
        q2 = p.q * p.q
        alpha_hi = 8.0 * (q2 + 1.0) * (q2 + p.gamma * p.gamma) / q2

    def unstable(alpha: float) -> bool:
        pp = p.with_(alpha=alpha)
        b = discretize_bath(pp, n_modes, half_width, eps=eps)
        return max_re_eig(drift_matrix(pp, b)) > 0.0

    lo, hi = 1e-3, float(alpha_hi)
    if unstable(lo):
        raise DomainError("alpha_hi", "bracket low end already unstable")
    for _ in range(60):
        if unstable(hi):
            break
        hi *= 2.0
    else:
        raise DomainError("alpha_hi", "no instability found while expanding bracket")
    while hi - lo > rtol * lo:
        mid = math.sqrt(lo * hi)
        if unstable(mid):
            hi = mid
        else:
            lo = mid
    return math.sqrt(lo * hi)


def transient_growth_rate(sys: CovarianceSystem, t_max: float = 4.0,
                          steps: int = 400) -> float:
    """Diagnostic for the unstable regime: integrate dC/dt = AC + CA^T + D
    from vacuum and fit the late-time exponential rate of the system
    variance sum. No contract beyond this estimate."""
    a, d = sys.drift, sys.diffusion
    c = np.eye(a.shape[0]) / 2.0
    dt = t_max / steps
    half = steps // 2
    log_tr = []

    def rhs(cm):
        return a @ cm + cm @ a.T + d

    for i in range(steps):
        k1 = rhs(c)
        k2 = rhs(c + 0.5 * dt * k1)
        k3 = rhs(c + 0.5 * dt * k2)
        k4 = rhs(c + dt * k3)
        c = c + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if i >= half:
            log_tr.append(math.log(c[0, 0] + c[1, 1]))
    ts = dt * np.arange(half + 1, steps + 1)
    slope = np.polyfit(ts, np.array(log_tr), 1)[0]
    return float(slope)
