"""Shared exception types.

Every error raised on purpose by this package derives from KoscError, so
callers (and the CLI) can distinguish contract violations from bugs.
"""


class KoscError(Exception):
    """Base class for all package-level errors."""


class DomainError(KoscError):
    """An input violates a documented precondition."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class PoleError(KoscError):
    """A rational function was evaluated at (or too close to) one of its poles."""

    def __init__(self, z, what="self-energy"):
        self.z = z
        super().__init__(f"{what} evaluated at a pole, z={z!r}")


class SingularityError(KoscError):
    """A matrix inversion hit a (near-)singular point, e.g. an on-shell root."""

    def __init__(self, z, detail=""):
        self.z = z
        super().__init__(f"singular inverse retarded matrix at z={z!r} {detail}".rstrip())


class InstabilityError(KoscError):
    """The drift matrix is not Hurwitz; no steady state exists."""

    def __init__(self, max_re_eig):
        self.max_re_eig = max_re_eig
        super().__init__(f"drift matrix not Hurwitz (max Re eig = {max_re_eig:.6g})")


class DegenerateParameterError(KoscError):
    """A denominator that the formulas assume nonzero vanished."""


class RootSolverError(KoscError):
    """Polynomial root finding failed to converge; carries the coefficients."""

    def __init__(self, coefficients, detail=""):
        self.coefficients = list(coefficients)
        super().__init__(f"root solver did not converge {detail}".rstrip())


class SchemaError(KoscError):
    """An output table failed schema validation."""
