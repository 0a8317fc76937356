"""Steady-state Keldysh observables for a damped oscillator coupled to a
Lorentzian bath, cross-validated by a discretized-bath Lyapunov oracle."""

__version__ = "0.1.0"

from .errors import (DegenerateParameterError, DomainError, InstabilityError,
                     KoscError, PoleError, RootSolverError, SchemaError,
                     SingularityError)
from .model import Approx, ModelParams, Regime, RegimeLabel, from_physical, regime
from .spectral import (Branch, SelfEnergyValue, self_energy, self_energy_limit,
                       self_energy_rwa, spectral_density)
from .dispersion import (CharPoly, CriticalCouplingReport, Mode, PolyKind,
                         Stability, char_poly, classify, critical_coupling,
                         critical_coupling_report, det_inverse_retarded,
                         dispersion_residual, narrowband_roots, spectrum)
from .greens import (GreenKind, GreenMatrix, advanced_green, gk11,
                     keldysh_green, keldysh_inverse, retarded_green,
                     retarded_inverse)
from .steady import (DistributionFunction, SteadyStateReport, TemperatureProbe,
                     ZenoConvention, ZenoRegime, ZenoReport, correlation_c0,
                     distribution_function, effective_temperature_probe,
                     z_cut, zeno_parameter)
from .oracle import (BathDiscretization, CovarianceSystem, discretize_bath,
                     drift_matrix, hurwitz_threshold, max_re_eig,
                     oracle_number_density, steady_covariance,
                     transient_growth_rate, truncated_weight)

__all__ = [
    "DegenerateParameterError", "DomainError", "InstabilityError", "KoscError",
    "PoleError", "RootSolverError", "SchemaError", "SingularityError",
    "Approx", "ModelParams", "Regime", "RegimeLabel", "from_physical", "regime",
    "Branch", "SelfEnergyValue", "self_energy", "self_energy_limit",
    "self_energy_rwa", "spectral_density",
    "CharPoly", "CriticalCouplingReport", "Mode", "PolyKind", "Stability",
    "char_poly", "classify", "critical_coupling", "critical_coupling_report",
    "det_inverse_retarded", "dispersion_residual", "narrowband_roots", "spectrum",
    "GreenKind", "GreenMatrix", "advanced_green", "gk11", "keldysh_green",
    "keldysh_inverse", "retarded_green", "retarded_inverse",
    "DistributionFunction", "SteadyStateReport", "TemperatureProbe",
    "ZenoConvention", "ZenoRegime", "ZenoReport", "correlation_c0",
    "distribution_function", "effective_temperature_probe", "z_cut",
    "zeno_parameter",
    "BathDiscretization", "CovarianceSystem", "discretize_bath", "drift_matrix",
    "hurwitz_threshold", "max_re_eig", "oracle_number_density",
    "steady_covariance", "transient_growth_rate", "truncated_weight",
    "__version__",
]
