"""Characteristic polynomials, complex mode spectra, stability, critical coupling.

The self-consistent dispersion relation (frequency-dependent self-energy) is
polynomialized by clearing denominators, solved by companion-matrix roots,
and every root is polished by Newton iteration on the original transcendental
function. Clearing denominators plants spurious roots at the bath poles;
those are filtered by proximity to the cleared-denominator zeros or by the
residual of the transcendental function.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass

import numpy as np

from .errors import RootSolverError
from .model import Approx, ModelParams
from .spectral import self_energy, self_energy_rwa

# stability tolerance: below polish residual, above double-precision noise
TAU_STABILITY = 1e-9
# relative residual threshold for the spurious filter
RESIDUAL_TOL = 1e-8
# raw roots closer than this to a cleared-denominator zero are spurious
DENOM_ZERO_TOL = 1e-8


class Stability(enum.Enum):
    Stable = "Stable"
    Unstable = "Unstable"
    Marginal = "Marginal"


class PolyKind(enum.Enum):
    NonRWA = "nrwa"
    RWAPositive = "rwa+"
    RWANegative = "rwa-"


@dataclass(frozen=True)
class CharPoly:
    """Cleared-denominator dispersion polynomial.

    coefficients are ascending in degree; degree 6 for NonRWA, 3 per RWA
    branch. Leading coefficient is 1 by construction.
    """

    coefficients: tuple
    kind: PolyKind

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1


@dataclass(frozen=True)
class Mode:
    z: complex
    residual: float
    stability: Stability
    spurious: bool = False


def classify(z: complex, tau: float = TAU_STABILITY) -> Stability:
    im = complex(z).imag
    if im > tau:
        return Stability.Unstable
    if im < -tau:
        return Stability.Stable
    return Stability.Marginal


def _poly_nonrwa(p: ModelParams) -> np.ndarray:
    # [(z + i/r)^2 - q^2] * P2(z) + (alpha q^2 / 2) * P1(z), descending coeffs
    g = p.gamma
    a = p.q * p.q + 1.0
    t = np.array([1.0, 2j * g, -g * g - p.q * p.q], dtype=complex)
    p2 = np.array([1.0, 0.0, 2.0 * a - 4.0 * p.q * p.q, 0.0, a * a], dtype=complex)
    p1 = np.array([-1.0, 0.0, a], dtype=complex)
    return np.polyadd(np.polymul(t, p2), (p.alpha * p.q * p.q / 2.0) * p1)


def _poly_rwa(p: ModelParams, branch: int) -> np.ndarray:
    # branch +1: (z - q + i/r) ((q - z)^2 + 1) + (alpha/2)(q - z)
    # branch -1: the Schwarz reflection (-z - q - i/r) ((q + z)^2 + 1) + (alpha/2)(q + z)
    g = p.gamma
    if branch > 0:
        lin = np.array([1.0, 1j * g - p.q], dtype=complex)
        quad = np.array([1.0, -2.0 * p.q, p.q * p.q + 1.0], dtype=complex)
        tail = (p.alpha / 2.0) * np.array([-1.0, p.q], dtype=complex)
    else:
        lin = np.array([-1.0, -1j * g - p.q], dtype=complex)
        quad = np.array([1.0, 2.0 * p.q, p.q * p.q + 1.0], dtype=complex)
        tail = (p.alpha / 2.0) * np.array([1.0, p.q], dtype=complex)
    c = np.polyadd(np.polymul(lin, quad), tail)
    if branch < 0:
        c = -c  # make monic
    return c


def char_poly(p: ModelParams):
    """Cleared-denominator polynomial(s): one CharPoly for NonRWA, a
    (positive-branch, negative-branch) pair for RWA. Coefficients ascending."""
    if p.approx == Approx.NonRWA:
        c = _poly_nonrwa(p)
        return CharPoly(tuple(c[::-1]), PolyKind.NonRWA)
    cp = _poly_rwa(p, +1)
    cm = _poly_rwa(p, -1)
    return (CharPoly(tuple(cp[::-1]), PolyKind.RWAPositive),
            CharPoly(tuple(cm[::-1]), PolyKind.RWANegative))


def det_inverse_retarded(z: complex, p: ModelParams) -> complex:
    """Determinant of the 2x2 inverse retarded matrix, continued to complex z.

    NonRWA: -(z + i/r)^2 + q^2 - 2 q Sigma(z). RWA: product of the two
    branch functions. This is the transcendental function whose zeros the
    polynomials approximate.
    """
    g = p.gamma
    if p.approx == Approx.NonRWA:
        s = self_energy(z, p).value
        return -(z + 1j * g) ** 2 + p.q * p.q - 2.0 * p.q * s
    sp = self_energy_rwa(z, p).value
    sm = self_energy_rwa(-z, p).value
    return (z - p.q + 1j * g + sp) * (-z - p.q - 1j * g + sm)


def dispersion_residual(z: complex, p: ModelParams) -> float:
    """Relative residual |det(z)| / (1 + |z|^2); the det grows ~ |z|^2 so
    the normalization keeps one threshold meaningful at all frequencies."""
    return abs(det_inverse_retarded(z, p)) / (1.0 + abs(z) ** 2)


def _sigma_prime(z: complex, p: ModelParams) -> complex:
    # derivative of the full self-energy rational form
    if p.alpha == 0.0:
        return 0.0 + 0.0j
    a = p.q * p.q + 1.0
    c = p.alpha * p.q / 4.0
    n = a - z * z
    d = (z * z + a) ** 2 - 4.0 * p.q * p.q * z * z
    n1 = -2.0 * z
    d1 = 4.0 * z * (z * z + a - 2.0 * p.q * p.q)
    return c * (n1 * d - n * d1) / (d * d)


def _sigma_rwa_prime(z: complex, p: ModelParams) -> complex:
    if p.alpha == 0.0:
        return 0.0 + 0.0j
    u = p.q - z
    return (p.alpha / 2.0) * (u * u - 1.0) / (u * u + 1.0) ** 2


def _branch_fn(p: ModelParams, kind: PolyKind):
    # (f, f') used for Newton polish; per-branch for RWA to stay well
    # conditioned, full det for NonRWA
    g = p.gamma
    if kind == PolyKind.NonRWA:
        def f(z):
            return -(z + 1j * g) ** 2 + p.q * p.q - 2.0 * p.q * self_energy(z, p).value

        def fp(z):
            return -2.0 * (z + 1j * g) - 2.0 * p.q * _sigma_prime(z, p)
    elif kind == PolyKind.RWAPositive:
        def f(z):
            return z - p.q + 1j * g + self_energy_rwa(z, p).value

        def fp(z):
            return 1.0 + _sigma_rwa_prime(z, p)
    else:
        def f(z):
            return -z - p.q - 1j * g + self_energy_rwa(-z, p).value

        def fp(z):
            return -1.0 - _sigma_rwa_prime(-z, p)
    return f, fp


def _denominator_zeros(p: ModelParams, kind: PolyKind):
    if kind == PolyKind.NonRWA:
        return (p.q + 1j, p.q - 1j, -p.q + 1j, -p.q - 1j)
    if kind == PolyKind.RWAPositive:
        return (p.q + 1j, p.q - 1j)
    return (-p.q + 1j, -p.q - 1j)


def _polish(z0: complex, f, fp) -> complex:
    z = z0
    for _ in range(60):
        fz = f(z)
        dfz = fp(z)
        if dfz == 0:
            break
        step = fz / dfz
        z -= step
        if abs(step) < 1e-15 * (1.0 + abs(z)):
            break
    return z


def _solve_kind(p: ModelParams, coeffs_desc: np.ndarray, kind: PolyKind):
    try:
        raw = np.roots(coeffs_desc)
    except np.linalg.LinAlgError as e:
        raise RootSolverError(coeffs_desc.tolist(), str(e)) from None
    f, fp = _branch_fn(p, kind)
    zeros = _denominator_zeros(p, kind)
    modes = []
    for z0 in raw:
        if any(abs(z0 - w) < DENOM_ZERO_TOL for w in zeros):
            modes.append(Mode(complex(z0), dispersion_residual(z0, p),
                              classify(z0), spurious=True))
            continue
        z = _polish(complex(z0), f, fp)
        res_raw = dispersion_residual(z0, p)
        if not cmath.isfinite(z):
            z, res = complex(z0), res_raw
        else:
            res = dispersion_residual(z, p)
            if res > res_raw:  # polish never makes a root worse
                z, res = complex(z0), res_raw
        modes.append(Mode(z, res, classify(z), spurious=res > RESIDUAL_TOL))
    return modes


def _canonical(modes):
    return sorted(modes, key=lambda m: (-m.z.imag, m.z.real))


def spectrum(p: ModelParams, include_spurious: bool = False):
    """All non-spurious dispersion roots in canonical order
    (descending Im, then ascending Re), polished and stability-labeled.

    alpha == 0 is the decoupled oscillator and is handled analytically:
    the cleared-denominator polynomial factors exactly through the bath
    poles there (for r == 1 a genuine root coincides with one), so the
    decoupled modes +-q - i/r (NonRWA) / q - i/r, -q - i/r (RWA) are
    returned directly.
    """
    g = p.gamma
    if p.alpha == 0.0:
        # same two modes either way: counter-rotating terms carry no weight
        zs = (p.q - 1j * g, -p.q - 1j * g)
        modes = [Mode(z, dispersion_residual(z, p), classify(z)) for z in zs]
        return _canonical(modes)
    if p.approx == Approx.NonRWA:
        modes = _solve_kind(p, _poly_nonrwa(p), PolyKind.NonRWA)
    else:
        modes = (_solve_kind(p, _poly_rwa(p, +1), PolyKind.RWAPositive)
                 + _solve_kind(p, _poly_rwa(p, -1), PolyKind.RWANegative))
    if not include_spurious:
        modes = [m for m in modes if not m.spurious]
    return _canonical(modes)


def narrowband_roots(p: ModelParams):
    """Closed-form roots of the narrow-bath quartic
    z^4 + (r^-2 + 2 q^2) z^2 - q^2 (alpha + r^-2) = 0.

    Diagnostic: the quartic does not reduce to the decoupled modes at
    alpha = 0, so agreement with spectrum() is reported, never asserted.
    """
    g2 = p.gamma * p.gamma
    b = g2 + 2.0 * p.q * p.q
    c = -p.q * p.q * (p.alpha + g2)
    disc = cmath.sqrt(b * b - 4.0 * c)
    zsq = [(-b + disc) / 2.0, (-b - disc) / 2.0]
    roots = []
    for w in zsq:
        rt = cmath.sqrt(w)  # principal branch
        roots.extend((rt, -rt))

    def resid(z):
        v = z ** 4 + b * z * z + c
        return abs(v) / (1.0 + abs(z) ** 4)

    return _canonical([Mode(z, resid(z), classify(z)) for z in roots])


@dataclass(frozen=True)
class CriticalCouplingReport:
    """Numeric solve plus the two closed forms it is compared against.

    closed_form_rinv2 = 2 (q^2+1)(q^2 + r^-2)/q^2 matches the numeric solve;
    closed_form_r2 = 2 (q^2+1)(q^2 + r^2)/q^2 is carried for comparison
    (the two coincide at r = 1). Surfaced, not used for logic.
    """

    alpha_c: float
    closed_form_rinv2: float
    closed_form_r2: float


def _det0(alpha: float, p: ModelParams) -> float:
    # det of the inverse retarded matrix at z = 0 as a function of coupling
    pp = p.with_(alpha=alpha, approx=Approx.NonRWA)
    s0 = self_energy(0.0, pp).value.real
    return p.gamma * p.gamma + p.q * p.q - 2.0 * p.q * s0


def critical_coupling(p: ModelParams) -> float:
    """Coupling at which the inverse retarded determinant vanishes at z = 0,
    by bracketed scalar root solve (authoritative over any closed form)."""
    from scipy.optimize import brentq

    lo, hi = 0.0, 8.0 * (p.q * p.q + 1.0) * (p.q * p.q + p.gamma * p.gamma) / (p.q * p.q)
    flo = _det0(lo, p)
    for _ in range(60):
        if flo * _det0(hi, p) < 0:
            break
        hi *= 2.0
    else:
        raise RootSolverError([], f"no sign change for critical coupling up to alpha={hi}")
    return float(brentq(lambda a: _det0(a, p), lo, hi, xtol=1e-14, rtol=1e-15))


def critical_coupling_report(p: ModelParams) -> CriticalCouplingReport:
    q2 = p.q * p.q
    pref = 2.0 * (q2 + 1.0) / q2
    return CriticalCouplingReport(
        alpha_c=critical_coupling(p),
        closed_form_rinv2=pref * (q2 + p.gamma * p.gamma),
        closed_form_r2=pref * (q2 + p.r * p.r),
    )
