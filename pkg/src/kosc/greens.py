"""2x2 inverse retarded / advanced / Keldysh matrices and Green's functions.

Basis is (a, a^dagger) at a single real frequency z. The advanced matrix is
the conjugate transpose of the retarded one at real z by construction, so
fluctuation-dissipation residuals probe only the distribution matrix and
not independent rounding paths.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import SingularityError
from .model import Approx, ModelParams
from .spectral import self_energy, self_energy_rwa

# |det D^re| below this times (1 + |z|^2) counts as singular (on-shell root)
DET_TOL = 1e-14


class GreenKind(enum.Enum):
    InverseRetarded = "InverseRetarded"
    Retarded = "Retarded"
    Advanced = "Advanced"
    Keldysh = "Keldysh"


@dataclass(frozen=True)
class GreenMatrix:
    entries: np.ndarray  # 2x2 complex
    kind: GreenKind
    at: float  # real frequency; 0.0 for the frequency-independent Keldysh inverse
    approx: Approx


def retarded_inverse(z: float, p: ModelParams) -> GreenMatrix:
    """Inverse retarded matrix at real z.

    NonRWA couples the (a, a^dagger) sectors through the even self-energy
    (same value in all four slots it enters); RWA is diagonal with the
    forward branch at +z and the reflected branch at -z.
    """
    g = p.gamma
    if p.approx == Approx.NonRWA:
        s = self_energy(z, p).value
        m = np.array([[z - p.q + 1j * g + s, s],
                      [s, -z - p.q - 1j * g + s]], dtype=complex)
    else:
        sp = self_energy_rwa(z, p).value
        sm = self_energy_rwa(-z, p).value
        m = np.array([[z - p.q + 1j * g + sp, 0.0],
                      [0.0, -z - p.q - 1j * g + sm]], dtype=complex)
    return GreenMatrix(m, GreenKind.InverseRetarded, float(z), p.approx)


def keldysh_inverse(p: ModelParams) -> GreenMatrix:
    """Frequency-independent Keldysh component (2i/r) * identity."""
    m = (2j * p.gamma) * np.eye(2, dtype=complex)
    return GreenMatrix(m, GreenKind.Keldysh, 0.0, p.approx)


def _checked_inverse(z: float, p: ModelParams) -> np.ndarray:
    d = retarded_inverse(z, p).entries
    det = d[0, 0] * d[1, 1] - d[0, 1] * d[1, 0]
    if abs(det) <= DET_TOL * (1.0 + abs(z) ** 2):
        raise SingularityError(z, "(on-shell real root)")
    return np.array([[d[1, 1], -d[0, 1]], [-d[1, 0], d[0, 0]]], dtype=complex) / det


def retarded_green(z: float, p: ModelParams) -> GreenMatrix:
    return GreenMatrix(_checked_inverse(z, p), GreenKind.Retarded, float(z), p.approx)


def advanced_green(z: float, p: ModelParams) -> GreenMatrix:
    gre = _checked_inverse(z, p)
    return GreenMatrix(gre.conj().T, GreenKind.Advanced, float(z), p.approx)


def keldysh_green(z: float, p: ModelParams) -> GreenMatrix:
    """G^K = -G^re D^K G^ad with G^ad the conjugate transpose of G^re."""
    gre = _checked_inverse(z, p)
    dk = keldysh_inverse(p).entries
    gk = -gre @ dk @ gre.conj().T
    return GreenMatrix(gk, GreenKind.Keldysh, float(z), p.approx)


def gk11(z: float, p: ModelParams) -> float:
    """Closed form of i G^K_11 at real z; nonnegative, tail 2/(r z^2).

    Float-only arithmetic: this sits in the quadrature hot loop.
    """
    g = p.gamma
    q = p.q
    if p.approx == Approx.RWA:
        if p.alpha == 0.0:
            s = 0.0
        else:
            u = q - z
            s = (p.alpha / 2.0) * u / (u * u + 1.0)
        den = (z - q + s) ** 2 + g * g
        if den <= 0.0:
            raise SingularityError(z)
        return 2.0 * g / den
    if p.alpha == 0.0:
        s = 0.0
    else:
        q2 = q * q
        sden = (z * z + q2 + 1.0) ** 2 - 4.0 * q2 * z * z
        s = (p.alpha * q / 4.0) * (q2 - z * z + 1.0) / sden
    num = 2.0 * g * ((z + q - s) ** 2 + g * g + s * s)
    den = (z * z - g * g - q * q + 2.0 * q * s) ** 2 + 4.0 * z * z * g * g
    if den <= 0.0:
        raise SingularityError(z)
    return num / den
