"""Lag-window kernels used to weight autocovariance sums.

Three families are supported: the truncated polynomial kernel
``(1 - |x|^q)_+``, the Bartlett (triangular) kernel, and the quadratic
spectral kernel.  The first two vanish outside ``[-1, 1]``; the quadratic
spectral kernel has unbounded support.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import ConfigurationError

POLY = "poly"
BARTLETT = "bartlett"
QS = "qs"

KERNEL_KINDS = (POLY, BARTLETT, QS)

# Below this threshold the quadratic spectral formula is evaluated by its
# Taylor expansion to avoid 0/0 cancellation at the origin.
_QS_TAYLOR_CUTOFF = 1e-8


@dataclass(frozen=True)
class KernelSpec:
    """A kernel family plus its exponent (used by the polynomial family only).

    Parameters
    ----------
    kind : str
        One of ``"poly"``, ``"bartlett"``, ``"qs"``.
    q : float
        Exponent of the truncated polynomial kernel; must be positive.
        Ignored by the other families.
    """

    kind: str = POLY
    q: float = 2.0

    def __post_init__(self):
        if self.kind not in KERNEL_KINDS:
            raise ConfigurationError(
                f"unknown kernel kind {self.kind!r}; expected one of {KERNEL_KINDS}"
            )
        if self.kind == POLY and not (math.isfinite(self.q) and self.q > 0):
            raise ConfigurationError(f"kernel exponent q must be positive, got {self.q}")


def _poly(x: np.ndarray, q: float) -> np.ndarray:
    ax = np.abs(x)
    return np.where(ax <= 1.0, 1.0 - ax**q, 0.0)


def _bartlett(x: np.ndarray) -> np.ndarray:
    ax = np.abs(x)
    return np.where(ax <= 1.0, 1.0 - ax, 0.0)


def _quadratic_spectral(x: np.ndarray) -> np.ndarray:
    # 25/(12 pi^2 x^2) * (sin(z)/z - cos(z)) with z = 6 pi x / 5 simplifies
    # to 3 (sin z / z - cos z) / z^2.
    z = 1.2 * np.pi * np.abs(x)
    small = np.abs(x) < _QS_TAYLOR_CUTOFF
    zs = np.where(small, 1.0, z)  # placeholder to keep the division defined
    exact = 3.0 * (np.sin(zs) / zs - np.cos(zs)) / zs**2
    z2 = z * z
    taylor = 1.0 - z2 / 10.0 + z2 * z2 / 280.0
    return np.where(small, taylor, exact)


def kernel_eval(spec: KernelSpec, x):
    """Evaluate the kernel at ``x`` (scalar or array).

    The result is even in ``x`` and equals 1 exactly at the origin; the
    quadratic spectral kernel is defined there by its analytic limit.

    Raises
    ------
    ValueError
        If any entry of ``x`` is not finite.
    """
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("kernel argument must be finite")
    if spec.kind == POLY:
        out = _poly(arr, spec.q)
    elif spec.kind == BARTLETT:
        out = _bartlett(arr)
    else:
        out = _quadratic_spectral(arr)
    if np.ndim(x) == 0:
        return float(out)
    return out
