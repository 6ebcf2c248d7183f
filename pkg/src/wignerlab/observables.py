"""Second moments, uncertainty products and parton-picture kinematics."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import DomainError, EnvelopeError
from .minkowski import rapidity_from_energy
from .oscillator import SQRT2, OscillatorState, integrate_squeezed, psi
from .quadrature import ETA_MAX

MOMENT_FIELDS = (
    "eta",
    "var_z", "var_t", "var_u", "var_v",
    "var_qz", "var_q0", "var_qu", "var_qv",
    "product_z_qz", "product_u_qu", "product_v_qv",
)


@dataclass(frozen=True)
class MomentReport:
    """Ground-state variances of the squeezed oscillator (natural units)."""

    eta: float
    var_z: float
    var_t: float
    var_u: float
    var_v: float
    var_qz: float
    var_q0: float
    var_qu: float
    var_qv: float
    product_z_qz: float
    product_u_qu: float
    product_v_qv: float

    @classmethod
    def from_variances(cls, eta, var_z, var_t, var_u, var_v, var_qz, var_q0, var_qu, var_qv):
        return cls(
            eta, var_z, var_t, var_u, var_v, var_qz, var_q0, var_qu, var_qv,
            product_z_qz=var_z * var_qz,
            product_u_qu=var_u * var_qu,
            product_v_qv=var_v * var_qv,
        )

    def to_dict(self) -> dict:
        return asdict(self)


def second_moments(eta: float) -> MomentReport:
    e2 = math.exp(2.0 * eta)
    c2 = math.cosh(2.0 * eta) / 2.0
    return MomentReport.from_variances(
        eta,
        var_z=c2, var_t=c2, var_u=e2 / 2.0, var_v=1.0 / (2.0 * e2),
        var_qz=c2, var_q0=c2, var_qu=1.0 / (2.0 * e2), var_qv=e2 / 2.0,
    )


def _gradient_lightcone(state: OscillatorState, z, t, step: float = 1e-4):
    """Central-difference ``(d psi/du, d psi/dv)`` with steps scaled to the squeeze."""
    hu = step * math.exp(state.eta)
    hv = step * math.exp(-state.eta)
    du = (hu / SQRT2, hu / SQRT2)
    dv = (hv / SQRT2, -hv / SQRT2)
    gu = (psi(state, z + du[0], t + du[1]) - psi(state, z - du[0], t - du[1])) / (2.0 * hu)
    gv = (psi(state, z + dv[0], t + dv[1]) - psi(state, z - dv[0], t - dv[1])) / (2.0 * hv)
    return gu, gv


def moments_quadrature(eta: float) -> MomentReport:
    """Variances by numerical integration over the squeezed ground state.

    Position moments integrate ``x**2 |psi|**2``.  Momentum moments use the
    Plancherel form ``<q_a**2> = integral |d psi / d a|**2`` with the
    derivatives taken by finite differences of ``psi`` itself, so no momentum
    closed form enters.
    """
    if abs(eta) > ETA_MAX:
        raise EnvelopeError(f"|eta| = {abs(eta)} exceeds the validated envelope {ETA_MAX}")
    state = OscillatorState(0, eta)

    def position(weight):
        return integrate_squeezed(lambda z, t: weight(z, t) * psi(state, z, t) ** 2, eta)

    def momentum(combine):
        def integrand(z, t):
            gu, gv = _gradient_lightcone(state, z, t)
            return combine(gu, gv) ** 2
        return integrate_squeezed(integrand, eta)

    return MomentReport.from_variances(
        eta,
        var_z=position(lambda z, t: z * z),
        var_t=position(lambda z, t: t * t),
        var_u=position(lambda z, t: (z + t) ** 2 / 2.0),
        var_v=position(lambda z, t: (z - t) ** 2 / 2.0),
        # d/dz = (d/du + d/dv)/sqrt2, d/dt = (d/du - d/dv)/sqrt2
        var_qz=momentum(lambda gu, gv: (gu + gv) / SQRT2),
        var_q0=momentum(lambda gu, gv: (gu - gv) / SQRT2),
        var_qu=momentum(lambda gu, gv: gu),
        var_qv=momentum(lambda gu, gv: gv),
    )


def interaction_time_ratio(eta: float) -> float:
    """Interaction time over oscillator period, ``exp(-2 eta)``."""
    if eta < 0:
        raise DomainError(f"rapidity must be non-negative, got {eta}")
    return math.exp(-2.0 * eta)


def longitudinal_density(eta: float, axis: str, x):
    """Marginal of the squeezed ground state along ``z`` or ``q_z``.

    Both marginals are ``(pi cosh 2eta)**-1/2 exp(-x**2 / cosh 2eta)``.
    """
    if axis not in ("z", "q_z"):
        raise ValueError(f"axis must be 'z' or 'q_z', got {axis!r}")
    c = math.cosh(2.0 * eta)
    return np.exp(-np.asarray(x, dtype=np.float64) ** 2 / c) / math.sqrt(math.pi * c)


@dataclass(frozen=True)
class PartonSummary:
    eta: float
    time_ratio: float
    var_z: float
    var_qz: float

    def to_dict(self) -> dict:
        return asdict(self)


def parton_summary(eta: float | None = None, energy: float | None = None, mass: float | None = None):
    """Rapidity, time-dilation ratio and longitudinal widths for a fast hadron."""
    if eta is None:
        if energy is None or mass is None:
            raise DomainError("give either eta or both energy and mass")
        eta = rapidity_from_energy(mass, energy).eta
    m = second_moments(eta)
    return PartonSummary(eta=eta, time_ratio=interaction_time_ratio(eta), var_z=m.var_z, var_qz=m.var_qz)
