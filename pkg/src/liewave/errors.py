"""Exception types shared across the package."""


class LieWaveError(Exception):
    """Base class for all package-specific errors."""


class DimensionError(LieWaveError, ValueError):
    """Invalid or mismatched matrix/lattice dimensions."""


class NotAntiHermitianError(LieWaveError, ValueError):
    """Matrix fails the anti-Hermiticity requirement beyond projection tolerance."""


class NotUnitaryError(LieWaveError, ValueError):
    """Matrix fails the unitarity requirement."""


class RealModeError(LieWaveError, ValueError):
    """Complex entries supplied to a real-representation operation."""


class InvalidTransformError(LieWaveError, ValueError):
    """Gauge transform sampler returned a non-unitary matrix."""


class UnsupportedFieldError(LieWaveError, ValueError):
    """Operation requires a field property (e.g. time independence) that does not hold."""


class ResolutionError(LieWaveError, ValueError):
    """Spatial grid does not resolve the short-time kernel."""


class SolverError(LieWaveError, RuntimeError):
    """Linear solve failed to converge.

    Carries the final residual so reports can show how far off the solve was.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class UndefinedDistributionError(LieWaveError, ValueError):
    """All coefficients vanish; outcome probabilities are undefined."""


class ConfigValidationError(LieWaveError, ValueError):
    """Experiment configuration is invalid; lists every violation found."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid configuration:\n" + "\n".join(f"  - {v}" for v in self.violations))
