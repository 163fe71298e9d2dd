"""Exception and warning types shared across the package."""


class LrcovError(Exception):
    """Base class for errors raised by this package."""


class ConfigurationError(LrcovError, ValueError):
    """An invalid parameter value or an infeasible configuration."""


class PanelFormatError(LrcovError, ValueError):
    """Malformed input data: ragged rows, non-numeric or non-finite cells."""


class NumericalError(LrcovError, RuntimeError):
    """A numerical routine failed to produce a reliable result."""

    def __init__(self, message, last_estimate=None):
        super().__init__(message)
        self.last_estimate = last_estimate


class ValidityWarning(UserWarning):
    """The input is formally acceptable but statistically suspicious."""
