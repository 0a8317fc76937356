"""Bath spectral density and self-energy functions.

The bath is a unit-width Lorentzian centered at q with total weight
alpha/2. The self-energy is the principal-value (real-axis) kernel in
closed rational form; complex arguments use the same rational expression,
which is its unique analytic continuation. Two limiting forms (narrow and
wide band) and the rotating-wave variant are provided.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import PoleError
from .model import ModelParams

# |denominator| below POLE_TOL * (1 + |numerator|) counts as a pole hit;
# guards against silent overflow near the bath resonances.
POLE_TOL = 1e-12


class Branch(enum.Enum):
    FullNonRWA = "full"
    NarrowBand = "narrow"
    WideBand = "wide"
    RWA = "rwa"


@dataclass(frozen=True)
class SelfEnergyValue:
    value: complex
    branch: Branch


def _pole_check(num: complex, den: complex, z):
    if abs(den) < POLE_TOL * (1.0 + abs(num)):
        raise PoleError(z)


def spectral_density(z: float, p: ModelParams) -> float:
    """Lorentzian bath density at real z: peak alpha/(2 pi) at z = q,
    half width 1. Integrates to alpha/2 over the real line."""
    dz = z - p.q
    return (p.alpha / (2.0 * math.pi)) / (dz * dz + 1.0)


def self_energy(z: complex, p: ModelParams) -> SelfEnergyValue:
    """Full self-energy (alpha q / 4) (q^2 - z^2 + 1) / ((z^2+q^2+1)^2 - 4 q^2 z^2).

    Even in z and real on the real axis. alpha == 0 returns exactly 0:
    the decoupled limit is analytic even at the bath poles where the
    rational form would be 0/0.
    """
    if p.alpha == 0.0:
        return SelfEnergyValue(0.0 + 0.0j, Branch.FullNonRWA)
    z = complex(z)
    q2 = p.q * p.q
    num = (p.alpha * p.q / 4.0) * (q2 - z * z + 1.0)
    den = (z * z + q2 + 1.0) ** 2 - 4.0 * q2 * z * z
    _pole_check(num, den, z)
    return SelfEnergyValue(num / den, Branch.FullNonRWA)


def self_energy_limit(z: complex, p: ModelParams, which: Branch) -> SelfEnergyValue:
    """Narrow-band limit alpha q / (4 (q^2 - z^2)) or wide-band limit
    (alpha q / 4) (1 - z^2) / (1 + z^2)^2."""
    z = complex(z)
    if which == Branch.NarrowBand:
        num = p.alpha * p.q / 4.0
        den = p.q * p.q - z * z
        _pole_check(num, den, z)
        return SelfEnergyValue(num / den, Branch.NarrowBand)
    if which == Branch.WideBand:
        num = (p.alpha * p.q / 4.0) * (1.0 - z * z)
        den = (1.0 + z * z) ** 2
        _pole_check(num, den, z)
        return SelfEnergyValue(num / den, Branch.WideBand)
    raise ValueError(f"not a limiting branch: {which}")


def self_energy_rwa(z: complex, p: ModelParams) -> SelfEnergyValue:
    """Rotating-wave self-energy (alpha/2) (q - z) / ((q - z)^2 + 1);
    poles at z = q +- i. Real on the real axis; alpha == 0 gives 0."""
    if p.alpha == 0.0:
        return SelfEnergyValue(0.0 + 0.0j, Branch.RWA)
    z = complex(z)
    u = p.q - z
    num = (p.alpha / 2.0) * u
    den = u * u + 1.0
    _pole_check(num, den, z)
    return SelfEnergyValue(num / den, Branch.RWA)


