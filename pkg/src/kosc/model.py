"""Dimensionless parameter space and regime classification.

All frequencies are measured in units of the bath linewidth, which is 1
internally; z denotes the dimensionless frequency. The three parameters are
q (oscillator frequency over bath linewidth), r (bath linewidth over
mechanical damping) and alpha (coupling energy over bath linewidth).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

from .errors import DomainError

# Regime thresholds. The asymptotic conditions (q >> 1 narrowband, q << 1
# broadband) need concrete cutoffs to be testable; these are convention.
Q_HI = 5.0
Q_LO = 0.2
R_LO = 0.5
R_HI = 2.0


class Approx(enum.Enum):
    """Whether counter-rotating coupling terms are kept."""

    NonRWA = "nrwa"
    RWA = "rwa"


class RegimeLabel(enum.Enum):
    Markovian = "Markovian"
    NonMarkovian = "NonMarkovian"
    Crossover = "Crossover"


@dataclass(frozen=True)
class Regime:
    label: RegimeLabel


def _require(cond, fieldname, message):
    if not cond:
        raise DomainError(fieldname, message)


@dataclass(frozen=True)
class ModelParams:
    """Single source of truth for every computation downstream.

    q > 0, r > 0, alpha >= 0; alpha == 0 is the bath-decoupled oscillator
    (pure damped decay), used as the baseline for the Zeno parameter.
    """

    q: float
    r: float
    alpha: float = 0.0
    approx: Approx = Approx.NonRWA

    def __post_init__(self):
        for name in ("q", "r", "alpha"):
            v = getattr(self, name)
            _require(isinstance(v, (int, float)) and math.isfinite(v), name, "must be finite")
        _require(self.q > 0, "q", "must be > 0")
        _require(self.r > 0, "r", "must be > 0")
        _require(self.alpha >= 0, "alpha", "must be >= 0")
        _require(isinstance(self.approx, Approx), "approx", "must be an Approx")
        # normalize ints to floats so frozen instances hash/compare uniformly
        object.__setattr__(self, "q", float(self.q))
        object.__setattr__(self, "r", float(self.r))
        object.__setattr__(self, "alpha", float(self.alpha))

    @property
    def gamma(self) -> float:
        """Mechanical damping rate in bath-linewidth units (1/r)."""
        return 1.0 / self.r

    def with_(self, **kw) -> "ModelParams":
        return replace(self, **kw)


def from_physical(omega0: float, lam: float, gamma_m: float, alpha: float,
                  approx: Approx = Approx.NonRWA) -> ModelParams:
    """Reduce dimensionful (omega0, lam, gamma_m, alpha) to ModelParams.

    lam is the bath linewidth; the reduction is q = omega0/lam,
    r = lam/gamma_m, dimensionless coupling alpha/lam. Scale invariant:
    multiplying all four inputs by c > 0 gives the same ModelParams.
    """
    for name, v in (("omega0", omega0), ("lam", lam), ("gamma_m", gamma_m), ("alpha", alpha)):
        _require(isinstance(v, (int, float)) and math.isfinite(v), name, "must be finite")
    _require(omega0 > 0, "omega0", "must be > 0")
    _require(lam > 0, "lam", "must be > 0")
    _require(gamma_m > 0, "gamma_m", "must be > 0")
    _require(alpha >= 0, "alpha", "must be >= 0")
    return ModelParams(q=omega0 / lam, r=lam / gamma_m, alpha=alpha / lam, approx=approx)


def regime(p: ModelParams) -> Regime:
    """Classify (q, r) as Markovian / NonMarkovian / Crossover.

    Deterministic and total: any valid ModelParams gets exactly one label.
    """
    if p.q >= Q_HI and p.r <= R_LO:
        return Regime(RegimeLabel.NonMarkovian)
    if p.q <= Q_LO and p.r >= R_HI:
        return Regime(RegimeLabel.Markovian)
    return Regime(RegimeLabel.Crossover)
