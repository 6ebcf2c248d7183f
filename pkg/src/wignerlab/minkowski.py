"""Four-vector kinematics along the z axis.

Components are ordered ``(x, y, z, t)`` with metric signature ``(-, -, -, +)``
and natural units (c = 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

PROTON_MASS_GEV = 0.938


@dataclass(frozen=True)
class FourVector:
    x: float
    y: float
    z: float
    t: float

    @classmethod
    def from_array(cls, a) -> FourVector:
        x, y, z, t = (float(c) for c in np.asarray(a, dtype=np.float64).reshape(4))
        return cls(x, y, z, t)

    @classmethod
    def at_rest(cls, m: float) -> FourVector:
        return cls(0.0, 0.0, 0.0, m)

    @classmethod
    def lightlike_z(cls, omega: float) -> FourVector:
        return cls(0.0, 0.0, omega, omega)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z, self.t], dtype=np.float64)

    def __array__(self, dtype=None, copy=None):
        a = self.as_array()
        return a if dtype is None else a.astype(dtype)


@dataclass(frozen=True)
class Rapidity:
    eta: float

    def __post_init__(self):
        if not math.isfinite(self.eta):
            raise DomainError(f"rapidity must be finite, got {self.eta!r}")

    def __float__(self) -> float:
        return float(self.eta)

    @property
    def velocity(self) -> float:
        return math.tanh(self.eta)


def _eta(eta) -> float:
    return float(eta.eta) if isinstance(eta, Rapidity) else float(eta)


def norm_squared(p) -> float:
    """Minkowski square ``t**2 - x**2 - y**2 - z**2``."""
    x, y, z, t = np.asarray(p, dtype=np.float64).reshape(4)
    return float(t * t - x * x - y * y - z * z)


def boost_z(eta) -> np.ndarray:
    """Boost along z by rapidity ``eta``, acting on column vectors ``(x, y, z, t)``."""
    e = _eta(eta)
    ch, sh = math.cosh(e), math.sinh(e)
    b = np.eye(4)
    b[2, 2] = b[3, 3] = ch
    b[2, 3] = b[3, 2] = sh
    return b


@dataclass(frozen=True)
class Dispersion:
    """Energy of a free particle together with its slow and fast limits."""

    mass: float
    momentum: float
    energy: float
    nonrelativistic: float
    ultrarelativistic: float


def dispersion_energy(m: float, p: float) -> float:
    """Return ``sqrt(m**2 + p**2)``; see :func:`dispersion` for the limiting forms."""
    if m < 0 or p < 0:
        raise DomainError(f"mass and momentum must be non-negative, got m={m}, p={p}")
    return math.hypot(m, p)


def dispersion(m: float, p: float) -> Dispersion:
    """Einstein energy with the ``m + p**2/2m`` and ``E = p`` limits.

    The nonrelativistic limit is ``nan`` for a massless particle.
    """
    e = dispersion_energy(m, p)
    slow = m + p * p / (2.0 * m) if m > 0 else math.nan
    return Dispersion(mass=m, momentum=p, energy=e, nonrelativistic=slow, ultrarelativistic=p)


def rapidity_from_energy(m: float, energy: float) -> Rapidity:
    if m <= 0:
        raise DomainError(f"mass must be positive, got {m}")
    if energy < m:
        raise DomainError(f"energy {energy} is below the rest mass {m}")
    return Rapidity(math.acosh(energy / m))
