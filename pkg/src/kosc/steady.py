"""Steady-state scalars: correlation integral, Zeno parameter, distribution
function and its fluctuation-dissipation residual, effective-temperature probes.

The central quantity is c0 = 2<n>+1 = (1/2pi) * integral of i G^K_11 over
the real frequency line. The integrand is smooth and positive with a
2/(r z^2) tail; the line is split at Z_CUT and both tails are integrated
exactly under the substitution u = 1/z (the bare asymptote alone leaves
errors above the 1e-6 accuracy contract at large q/gamma corners).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .dispersion import _det0, spectrum
from .errors import DegenerateParameterError, DomainError
from .greens import advanced_green, gk11, keldysh_green, retarded_green
from .model import Approx, ModelParams
from .spectral import self_energy

# roots closer than this to the real axis make the integrand singular
DELTA_POLE = 1e-6
# reported in place of an infinite c0 when the flag is set
C0_CAP = 1e12
# regime assignment threshold on xi
EPS_XI = 1e-6

_QUAD_OPTS = dict(epsabs=1e-11, epsrel=1e-10)


class ZenoConvention(enum.Enum):
    """Literal: unnormalized frequency integral I with the bare -1 in the
    denominator, xi = (I(alpha) - I(0)) / (I(alpha) - 1). NormalizedDensity:
    xi = (<n>(alpha) - <n>(0)) / <n>(alpha), which degenerates to 1 because
    <n>(0) = 0 identically; kept to document the convention gap."""

    Literal = "literal"
    NormalizedDensity = "normalized"


class ZenoRegime(enum.Enum):
    Zeno = "Zeno"
    AntiZeno = "AntiZeno"
    Neutral = "Neutral"


@dataclass(frozen=True)
class SteadyStateReport:
    c0: float
    n_avg: float
    abs_err: float
    diverged: bool
    raw_integral: float
    negative_n_warning: bool = False


@dataclass(frozen=True)
class ZenoReport:
    xi: float
    regime: ZenoRegime
    convention: ZenoConvention


@dataclass(frozen=True)
class DistributionFunction:
    at: float
    matrix: np.ndarray
    residual: float


@dataclass(frozen=True)
class TemperatureProbe:
    t_low: float
    highfreq_coeff: float


def z_cut(p: ModelParams) -> float:
    return max(50.0, 10.0 * p.q + 10.0 * p.gamma)


def _static_unstable(p: ModelParams) -> bool:
    # zero-frequency determinant criterion; the transition where the
    # correlation integral genuinely diverges. Never fires for RWA, whose
    # zero-frequency determinant is a positive sum of squares.
    if p.approx != Approx.NonRWA:
        return False
    return _det0(p.alpha, p) <= 0.0


def correlation_c0(p: ModelParams) -> SteadyStateReport:
    """Quadrature of i G^K_11 over the real line, c0 = 2<n>+1.

    diverged is set when the steady state does not exist: either the
    zero-frequency determinant criterion fails (coupling at or beyond the
    critical value) or a dispersion root sits within DELTA_POLE of the real
    axis (integrand pole). In the latter case the quadrature is skipped and
    c0 carries the cap value; otherwise the integral is still evaluated and
    capped. <n> < 0 (possible for RWA below c0 = 1) is reported verbatim
    with the warning field set, never clamped.
    """
    modes = spectrum(p)
    near_pole = any(abs(m.z.imag) < DELTA_POLE for m in modes)
    diverged = near_pole or _static_unstable(p)
    if near_pole:
        c0 = C0_CAP
        return SteadyStateReport(c0, (c0 - 1.0) / 2.0, math.inf, True, 2.0 * math.pi * c0)

    zc = z_cut(p)
    pts = sorted({round(m.z.real, 9) for m in modes} | {0.0})
    pts = [x for x in pts if -zc < x < zc]
    f = lambda z: gk11(z, p)
    v_mid, e_mid = quad(f, -zc, zc, points=pts, limit=300, **_QUAD_OPTS)
    v_tail, e_tail = quad(lambda u: (f(1.0 / u) + f(-1.0 / u)) / (u * u),
                          0.0, 1.0 / zc, limit=100, **_QUAD_OPTS)
    raw = v_mid + v_tail
    abs_err = e_mid + e_tail
    c0 = raw / (2.0 * math.pi)
    if c0 >= C0_CAP:
        c0 = C0_CAP
        diverged = True
    n = (c0 - 1.0) / 2.0
    return SteadyStateReport(c0, n, abs_err, diverged, raw, negative_n_warning=n < 0.0)


def zeno_parameter(p: ModelParams,
                   convention: ZenoConvention = ZenoConvention.Literal) -> ZenoReport:
    """Relative change of the correlation integral against the decoupled
    baseline. At diverged points xi is NaN with a Neutral label (sweep
    semantics: a flagged row, not an exception)."""
    rep_a = correlation_c0(p)
    rep_0 = correlation_c0(p.with_(alpha=0.0))
    if rep_a.diverged or rep_0.diverged:
        return ZenoReport(math.nan, ZenoRegime.Neutral, convention)
    if convention == ZenoConvention.Literal:
        den = rep_a.raw_integral - 1.0
        if abs(den) <= 1e-12:
            raise DegenerateParameterError("zeno denominator I(alpha) - 1 vanished")
        xi = (rep_a.raw_integral - rep_0.raw_integral) / den
    else:
        den = rep_a.n_avg
        if abs(den) <= 1e-12:
            raise DegenerateParameterError("zeno denominator <n>(alpha) vanished")
        xi = (rep_a.n_avg - rep_0.n_avg) / den
    if math.isnan(xi) or abs(xi) <= EPS_XI:
        regime = ZenoRegime.Neutral
    elif xi > 0:
        regime = ZenoRegime.AntiZeno
    else:
        regime = ZenoRegime.Zeno
    return ZenoReport(xi, regime, convention)


def distribution_function(z: float, p: ModelParams) -> DistributionFunction:
    """Distribution matrix F closing G^K = G^re F - F G^ad, with its defect.

    F = sigma_z + (Sigma(z)/z) sigma_x off resonance (the exact closed-form
    solution for the coupled matrices); F = sigma_z for RWA. The residual is
    the max-norm defect of the relation evaluated from the assembled
    matrices.
    """
    if p.approx == Approx.NonRWA and z == 0.0:
        raise DomainError("z", "distribution function undefined at z = 0 (1/z factor)")
    if p.approx == Approx.NonRWA:
        s = self_energy(z, p).value.real
        f = np.array([[1.0, s / z], [s / z, -1.0]], dtype=complex)
    else:
        f = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
    gk = keldysh_green(z, p).entries
    gre = retarded_green(z, p).entries
    gad = advanced_green(z, p).entries
    defect = gk - (gre @ f - f @ gad)
    return DistributionFunction(float(z), f, float(np.abs(defect).max()))


def effective_temperature_probe(p: ModelParams) -> TemperatureProbe:
    """Two temperature-like coefficients the distribution function exposes.

    t_low: low-frequency coefficient of the off-diagonal of F matched
    against the equilibrium expansion 2T/z; equals Sigma(0)/2 =
    alpha q / (8 (q^2+1)). highfreq_coeff: constant term of a least-squares
    fit Sigma(z) ~ c + b/z^2 on z in [10, 100] (tends to 0). No single
    temperature is asserted: t_low is q-dependent. RWA: both are 0.
    """
    if p.approx == Approx.RWA:
        return TemperatureProbe(0.0, 0.0)
    t_low = p.alpha * p.q / (8.0 * (p.q * p.q + 1.0))
    zs = np.linspace(10.0, 100.0, 91)
    ys = np.array([self_energy(z, p).value.real for z in zs])
    a = np.column_stack([np.ones_like(zs), 1.0 / zs ** 2])
    coef, *_ = np.linalg.lstsq(a, ys, rcond=None)
    return TemperatureProbe(t_low, float(coef[0]))
