"""Quadrature rules shared by the wave-function and moment oracles."""

from __future__ import annotations

import math
import os
from functools import lru_cache

import numpy as np

DEFAULT_TOL = 1e-9
TOL_ENV = "WIGNERLAB_TOL"

# Validated parameter envelope for quadrature-backed results.
N_MAX = 12
ETA_MAX = 4.0


def tolerance() -> float:
    """Quadrature tolerance, overridable through ``WIGNERLAB_TOL``."""
    raw = os.environ.get(TOL_ENV)
    if not raw:
        return DEFAULT_TOL
    tol = float(raw)
    if not (tol > 0 and math.isfinite(tol)):
        raise ValueError(f"{TOL_ENV} must be a positive number, got {raw!r}")
    return tol


@lru_cache(maxsize=None)
def gauss_hermite(order: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights for weight ``exp(-x**2)`` on the real line."""
    x, w = np.polynomial.hermite.hermgauss(order)
    x.flags.writeable = False
    w.flags.writeable = False
    return x, w


@lru_cache(maxsize=None)
def _legendre(order: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def composite_gauss_legendre(lo: float, hi: float, panels: int, order: int = 16):
    """Nodes and weights of ``panels`` equal Gauss-Legendre panels on ``[lo, hi]``."""
    x, w = _legendre(order)
    edges = np.linspace(lo, hi, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights
