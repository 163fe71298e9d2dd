"""Input validation helpers for panels and covariance matrices."""

from __future__ import annotations

import numpy as np

from .exceptions import ConfigurationError


def check_panel(X, min_rows: int = 2) -> np.ndarray:
    """Validate an (n, p) panel: 2-d, finite, at least ``min_rows`` rows.

    Returns a float64 C-contiguous array (copying only when needed).
    """
    arr = np.ascontiguousarray(X, dtype=float)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise ConfigurationError(f"panel must be 2-d, got shape {arr.shape}")
    n, p = arr.shape
    if n < min_rows:
        raise ConfigurationError(f"panel needs at least {min_rows} rows, got {n}")
    if p < 1:
        raise ConfigurationError("panel needs at least one column")
    if not np.all(np.isfinite(arr)):
        raise ConfigurationError("panel entries must be finite")
    return arr


def check_cov_matrix(V, tol: float = 1e-10) -> np.ndarray:
    """Validate a square symmetric matrix (within ``tol``) with finite entries."""
    arr = np.ascontiguousarray(V, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ConfigurationError(f"covariance matrix must be square, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ConfigurationError("covariance matrix entries must be finite")
    if arr.size and np.max(np.abs(arr - arr.T)) > tol:
        raise ConfigurationError(f"matrix is not symmetric within {tol}")
    return arr


def symmetrize(A: np.ndarray) -> np.ndarray:
    """Return ``(A + A.T) / 2``; exact symmetry in floating point."""
    return (A + A.T) / 2.0
