"""Covariant harmonic-oscillator wave functions in the (z, t) plane.

Transverse coordinates are dropped and the time-like oscillator stays in its
ground state, so a state is labelled by the longitudinal excitation ``n`` and
the rapidity ``eta`` of the hadron.  Light-cone coordinates are
``u = (z + t)/sqrt(2)`` and ``v = (z - t)/sqrt(2)``; a z boost scales them by
``exp(eta)`` and ``exp(-eta)``.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import DomainError, EnvelopeError
from .quadrature import ETA_MAX, N_MAX, gauss_hermite

SQRT2 = math.sqrt(2.0)
PEAK_GROUND = 1.0 / math.sqrt(math.pi)


@dataclass(frozen=True)
class OscillatorState:
    n: int
    eta: float = 0.0

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 0:
            raise DomainError(f"excitation number must be a non-negative integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "eta", float(self.eta))

    @property
    def eigenvalue(self) -> int:
        """Oscillator eigenvalue of the (z, t) restriction: ``n + 1``."""
        return self.n + 1


class LightConePoint(NamedTuple):
    u: float
    v: float


def to_lightcone(z, t) -> LightConePoint:
    return LightConePoint((z + t) / SQRT2, (z - t) / SQRT2)


def from_lightcone(u, v) -> tuple:
    return (u + v) / SQRT2, (u - v) / SQRT2


def boost_point(p: LightConePoint, eta: float) -> LightConePoint:
    return LightConePoint(math.exp(eta) * p.u, math.exp(-eta) * p.v)


def boost_zt(z, t, eta: float) -> tuple:
    """Boost of ``(z, t)`` by rapidity ``eta``, written in the (z, t) basis."""
    ch, sh = math.cosh(eta), math.sinh(eta)
    return ch * z + sh * t, sh * z + ch * t


def hermite(n: int, x):
    """Physicists' Hermite polynomial ``H_n(x)`` by the three-term recurrence."""
    if n < 0:
        raise DomainError(f"Hermite degree must be non-negative, got {n}")
    x = np.asarray(x, dtype=np.float64)
    h0 = np.ones_like(x)
    if n == 0:
        return h0 if h0.ndim else float(h0)
    h1 = 2.0 * x
    for k in range(1, n):
        h0, h1 = h1, 2.0 * x * h1 - 2.0 * k * h0
    return h1 if h1.ndim else float(h1)


def hermite_function(n: int, x):
    """Normalized ``(2**n n! sqrt(pi))**-1/2 H_n(x) exp(-x**2/2)``.

    Evaluated by the normalized recurrence, which never forms ``H_n`` or
    ``n!`` and so does not overflow at large ``n``.
    """
    if n < 0:
        raise DomainError(f"Hermite degree must be non-negative, got {n}")
    out = kernels.hermite_functions(n, x)
    return out if out.ndim else float(out)


def psi(state: OscillatorState, z, t):
    """Lorentz-squeezed wave function ``psi_eta^n(z, t)``.

    Equals the rest-frame function at the inverse-boosted point, i.e.
    ``(pi n! 2**n)**-1/2 H_n(z') exp(-(z'**2 + t'**2)/2)`` with
    ``z' = (exp(-eta) u + exp(eta) v)/sqrt(2)``.
    """
    out = kernels.psi_points(state.n, state.eta, z, t)
    return out if out.ndim else float(out)


def check_envelope(n: int, eta: float) -> None:
    if n > N_MAX or abs(eta) > ETA_MAX:
        raise EnvelopeError(
            f"(n={n}, eta={eta}) outside the validated envelope n <= {N_MAX}, |eta| <= {ETA_MAX}"
        )


def rest_frame_nodes(order: int = 64):
    """Tensor Gauss-Hermite rule in rest-frame coordinates ``(z', t')``.

    Returns lab-frame points ``(z, t)`` for rapidity 0, rest-frame points, and
    weights already divided by ``exp(-(z'**2 + t'**2))``.  Boosting the
    returned rest-frame points by ``eta`` gives a rule adapted to the squeezed
    function, since the boost has unit Jacobian.
    """
    x, w = gauss_hermite(order)
    zr, tr = np.meshgrid(x, x, indexing="ij")
    weights = np.outer(w, w) * np.exp(zr * zr + tr * tr)
    return zr, tr, weights


def integrate_squeezed(f, eta: float, order: int = 64) -> float:
    """Integrate ``f(z, t)`` over the plane, for ``f`` localized like a squeezed Gaussian."""
    zr, tr, weights = rest_frame_nodes(order)
    z, t = boost_zt(zr, tr, eta)
    return float(np.sum(weights * f(z, t)))


def overlap(m: int, n: int, eta: float, order: int = 64) -> float:
    """``integral psi_eta^m psi_eta^n dz dt``."""
    a, b = OscillatorState(m, eta), OscillatorState(n, eta)
    return integrate_squeezed(lambda z, t: psi(a, z, t) * psi(b, z, t), eta, order)


def norm_quadrature(state: OscillatorState) -> float:
    """``integral psi**2 dz dt`` on a squeeze-adapted Gauss-Hermite grid."""
    check_envelope(state.n, state.eta)
    return integrate_squeezed(lambda z, t: psi(state, z, t) ** 2, state.eta)


def fkr_residual(n: int, h: float, eigenvalue: float | None = None, extent: float = 6.0) -> float:
    """Sup-norm residual of the rest-frame oscillator equation on a uniform grid.

    Applies ``(1/2)(z**2 + t**2 - d2/dz2 - d2/dt2) psi - lambda psi`` with
    second-order central differences at every interior node of
    ``[-extent, extent]**2``; ``lambda`` defaults to ``n + 1``.
    """
    if h <= 0:
        raise DomainError(f"grid step must be positive, got {h}")
    lam = n + 1 if eigenvalue is None else eigenvalue
    m = int(round(extent / h))
    x = np.arange(-m, m + 1) * h
    z, t = np.meshgrid(x, x, indexing="ij")
    f = psi(OscillatorState(n, 0.0), z, t)
    lap = (
        f[2:, 1:-1] + f[:-2, 1:-1] + f[1:-1, 2:] + f[1:-1, :-2] - 4.0 * f[1:-1, 1:-1]
    ) / (h * h)
    zi, ti, fi = z[1:-1, 1:-1], t[1:-1, 1:-1], f[1:-1, 1:-1]
    res = 0.5 * ((zi * zi + ti * ti) * fi - lap) - lam * fi
    return float(np.abs(res).max())


@dataclass(frozen=True)
class SampledField:
    """Real samples of a function on a rectangular grid.

    ``values[i, j]`` is the sample at ``(x[i], y[j])``; CSV rows run over ``j``
    fastest.
    """

    x_name: str
    y_name: str
    value_name: str
    x: np.ndarray
    y: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        if self.values.shape != (self.x.size, self.y.size):
            raise ValueError("values shape must match the grid axes")
        if not (np.isfinite(self.x).all() and np.isfinite(self.y).all()):
            raise ValueError("grid ranges must be finite")

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    def argmax(self) -> tuple[float, float]:
        i, j = np.unravel_index(np.argmax(np.abs(self.values)), self.values.shape)
        return float(self.x[i]), float(self.y[j])

    def to_csv(self, fh=None) -> str | None:
        """Write ``x,y,value`` rows with 17 significant digits."""
        buf = io.StringIO() if fh is None else fh
        buf.write(f"{self.x_name},{self.y_name},{self.value_name}\n")
        for i, xv in enumerate(self.x):
            xs = format(xv, ".17g")
            for j, yv in enumerate(self.y):
                buf.write(f"{xs},{format(yv, '.17g')},{format(self.values[i, j], '.17g')}\n")
        return buf.getvalue() if fh is None else None


def grid_axis(extent: float, count: int) -> np.ndarray:
    if count < 2:
        raise DomainError(f"grids need at least two points per axis, got {count}")
    return np.linspace(-extent, extent, count)


def sample_psi(state: OscillatorState, extent: float, shape=(101, 101)) -> SampledField:
    check_envelope(state.n, state.eta)
    z = grid_axis(extent, shape[0])
    t = grid_axis(extent, shape[1])
    zz, tt = np.meshgrid(z, t, indexing="ij")
    return SampledField("z", "t", "psi", z, t, psi(state, zz, tt))
