"""Difference-sequence validation, bandwidth rules, and the shared
configuration object consumed by the difference-based estimators."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import ConfigurationError
from .kernels import KernelSpec

# Fourth-order difference weights, published to four decimals; they sum to
# zero and have unit sum of squares up to that rounding.
DEFAULT_DIFF_SEQUENCE = (0.1942, 0.2809, 0.3832, -0.8582)

# Loose enough to accept four-decimal roundings of an exactly normalized
# sequence, tight enough to reject anything materially unnormalized.
DIFF_SEQUENCE_TOL = 1e-3


def validate_diff_sequence(d, tol: float = DIFF_SEQUENCE_TOL) -> np.ndarray:
    """Check that ``d`` sums to zero and has unit sum of squares.

    Returns the sequence as a float array, or raises ``ConfigurationError``
    naming the violated constraint.
    """
    arr = np.asarray(d, dtype=float)
    if arr.ndim != 1 or arr.size == 0:
        raise ConfigurationError("difference sequence must be a nonempty 1-d vector")
    if not np.all(np.isfinite(arr)):
        raise ConfigurationError("difference sequence must be finite")
    s = float(arr.sum())
    if abs(s) > tol:
        raise ConfigurationError(
            f"difference sequence must sum to zero: got sum {s:.6g}"
        )
    s2 = float((arr**2).sum())
    if abs(s2 - 1.0) > tol:
        raise ConfigurationError(
            f"difference sequence must have unit sum of squares: got {s2:.6g}"
        )
    return arr


def default_bandwidth(n: int, p: int) -> int:
    """Default lag-window bandwidth ``min(floor((n/log p)^(1/4)), floor((n-10)/28))``.

    Uses the natural logarithm. Requires ``n > 38`` and ``p >= 2`` so that
    both terms are positive.
    """
    if p < 2:
        raise ConfigurationError(f"bandwidth rule requires p >= 2, got p={p}")
    if n <= 38:
        raise ConfigurationError(f"bandwidth rule requires n > 38, got n={n}")
    first = int(math.floor((n / math.log(p)) ** 0.25))
    second = int(math.floor((n - 10) / 28))
    return max(1, min(first, second))


@dataclass(frozen=True)
class DiffConfig:
    """Configuration of the differencing step and lag window.

    Parameters
    ----------
    d : tuple of float
        Normalized difference sequence (validated on construction).
    h : int
        Lag spacing between the differenced observations.
    ell : int
        Kernel bandwidth of the lag window.
    kernel : KernelSpec
        Lag-window kernel.
    """

    d: tuple = DEFAULT_DIFF_SEQUENCE
    h: int = 1
    ell: int = 1
    kernel: KernelSpec = KernelSpec()

    def __post_init__(self):
        arr = validate_diff_sequence(self.d)
        object.__setattr__(self, "d", tuple(float(v) for v in arr))
        if int(self.h) != self.h or self.h < 1:
            raise ConfigurationError(f"lag spacing h must be a positive integer, got {self.h}")
        if int(self.ell) != self.ell or self.ell < 1:
            raise ConfigurationError(f"bandwidth ell must be a positive integer, got {self.ell}")
        object.__setattr__(self, "h", int(self.h))
        object.__setattr__(self, "ell", int(self.ell))

    @property
    def order(self) -> int:
        """Difference order (number of weights minus one)."""
        return len(self.d) - 1

    @property
    def span(self) -> int:
        """Total reach of the difference filter, ``order * h``."""
        return self.order * self.h

    def weights(self) -> np.ndarray:
        return np.asarray(self.d, dtype=float)

    def check_length(self, n: int) -> None:
        """Raise if a panel of length ``n`` is too short for this config."""
        if self.span + self.ell >= n:
            raise ConfigurationError(
                f"panel length n={n} too short: need order*h + ell = "
                f"{self.span} + {self.ell} < n"
            )


def default_diff_config(n: int, p: int, kernel: KernelSpec | None = None) -> DiffConfig:
    """Default configuration: bandwidth from ``default_bandwidth`` and
    spacing ``h = 2*ell``, with the fourth-order difference weights."""
    ell = default_bandwidth(n, p)
    spec = KernelSpec() if kernel is None else kernel
    cfg = DiffConfig(d=DEFAULT_DIFF_SEQUENCE, h=2 * ell, ell=ell, kernel=spec)
    cfg.check_length(n)
    return cfg
