"""Exception types shared across the package."""


class ReconError(Exception):
    """Base class for all reconstruction errors."""


class ConfigError(ReconError):
    """Invalid parameters, sampling budgets, or method/pattern combinations."""


class SymmetryError(ConfigError):
    """Operation requires a Hermitian-symmetric sampling pattern."""


class WindowSupportError(ConfigError):
    """Window weights extend outside the acquired rows."""


class CalibrationError(ReconError):
    """Too few calibration equations to fit interpolation weights."""


class NumericalError(ReconError):
    """Divergence or non-finite values encountered during iteration."""
