"""Momentum-energy wave functions of the squeezed oscillator.

The transform uses the kernel ``exp(-1j (q_z z - q_0 t)) / (2 pi)`` and the
light-cone momenta ``q_u = (q_0 - q_z)/sqrt(2)``, ``q_v = (q_0 + q_z)/sqrt(2)``.
With these signs the phase is ``q_v v - q_u u``, so ``q_u`` is conjugate to
``u`` and ``q_v`` to ``v``, and the ground-state transform is

    phi_eta = pi**-1/2 exp(-(exp(2 eta) q_u**2 + exp(-2 eta) q_v**2) / 2).

Swapping the two exponent labels gives a different function; the quadrature
in :func:`fourier_quadrature` reproduces this one and not the swapped one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import EnvelopeError
from .oscillator import SQRT2, OscillatorState, SampledField, check_envelope, grid_axis, psi
from .quadrature import ETA_MAX, composite_gauss_legendre, tolerance

_MAX_REFINEMENTS = 6


@dataclass(frozen=True)
class MomentumPoint:
    q_z: float
    q_0: float

    @property
    def q_u(self):
        return (self.q_0 - self.q_z) / SQRT2

    @property
    def q_v(self):
        return (self.q_0 + self.q_z) / SQRT2

    @classmethod
    def from_lightcone(cls, q_u, q_v) -> MomentumPoint:
        return cls((q_v - q_u) / SQRT2, (q_u + q_v) / SQRT2)


def lightcone_momentum(q_z, q_0) -> tuple:
    return (q_0 - q_z) / SQRT2, (q_0 + q_z) / SQRT2


def phi_ground(eta: float, q: MomentumPoint):
    """Closed-form ground-state momentum-energy wave function."""
    qu, qv = q.q_u, q.q_v
    e2 = math.exp(2.0 * eta)
    return np.exp(-0.5 * (e2 * qu * qu + qv * qv / e2)) / math.sqrt(math.pi)


class QuadratureNotConverged(RuntimeError):
    pass


def _transform(state: OscillatorState, wa, wb, panels_a: int, panels_b: int, half_width: float):
    eta = state.eta
    a, wa_w = composite_gauss_legendre(-half_width, half_width, panels_a)
    b, wb_w = composite_gauss_legendre(-half_width, half_width, panels_b)
    # (a, b) = (exp(-eta) u, exp(eta) v): the squeezed function is round here.
    u = math.exp(eta) * a
    v = math.exp(-eta) * b
    uu, vv = np.meshgrid(u, v, indexing="ij")
    z, t = (uu + vv) / SQRT2, (uu - vv) / SQRT2
    f = np.outer(wa_w, wb_w) * psi(state, z, t)
    return kernels.fourier_tensor_sum(f, a, b, wa, wb) / (2.0 * math.pi)


def _panels(freq: float, half_width: float) -> int:
    # Unit-width panels resolve the envelope; at most two periods per panel.
    length = 2.0 * half_width
    return max(int(math.ceil(length)), int(math.ceil(length * freq / (4.0 * math.pi))))


def fourier_quadrature(eta: float, q: MomentumPoint, n: int = 0, tol: float | None = None):
    """Transform ``psi_eta^n`` numerically at the momentum points ``q``.

    Integrates over the squeeze-adapted square ``|exp(-eta) u|, |exp(eta) v| <= L``
    with composite 16-point Gauss-Legendre panels, doubling the panel counts
    until successive results agree to ``tol`` (default from
    :func:`wignerlab.quadrature.tolerance`).  Returns complex values with the
    shape of ``q.q_z``; for the ground state the imaginary part vanishes.
    """
    if abs(eta) > ETA_MAX:
        raise EnvelopeError(f"|eta| = {abs(eta)} exceeds the validated envelope {ETA_MAX}")
    check_envelope(n, eta)
    tol = tolerance() if tol is None else tol
    state = OscillatorState(n, eta)
    qz, q0 = np.broadcast_arrays(np.asarray(q.q_z, dtype=np.float64), np.asarray(q.q_0, dtype=np.float64))
    shape = qz.shape
    qu, qv = lightcone_momentum(qz.ravel(), q0.ravel())
    # phase q_v v - q_u u, negated by the kernel sign
    wa = qu * math.exp(eta)
    wb = -qv * math.exp(-eta)
    half_width = 8.0 + math.sqrt(2.0 * n + 1.0)
    pa = _panels(float(np.abs(wa).max(initial=0.0)), half_width)
    pb = _panels(float(np.abs(wb).max(initial=0.0)), half_width)
    prev = _transform(state, wa, wb, pa, pb, half_width)
    for _ in range(_MAX_REFINEMENTS):
        pa, pb = 2 * pa, 2 * pb
        cur = _transform(state, wa, wb, pa, pb, half_width)
        if np.abs(cur - prev).max(initial=0.0) <= tol:
            return cur.reshape(shape) if shape else complex(cur[0])
        prev = cur
    raise QuadratureNotConverged(f"transform did not reach tolerance {tol} at eta={eta}, n={n}")


def momentum_grid(extent: float, shape=(101, 101)):
    qz = grid_axis(extent, shape[0])
    q0 = grid_axis(extent, shape[1])
    return qz, q0


def sample_phi(eta: float, extent: float, shape=(101, 101), n: int = 0) -> SampledField:
    """Momentum-space samples; closed form for the ground state, quadrature otherwise.

    Excited states are stored as ``|phi|`` with the phase of the dominant
    component, since their transforms are real (even n) or imaginary (odd n).
    """
    check_envelope(n, eta)
    qz, q0 = momentum_grid(extent, shape)
    gz, g0 = np.meshgrid(qz, q0, indexing="ij")
    point = MomentumPoint(gz, g0)
    if n == 0:
        values = phi_ground(eta, point)
    else:
        raw = fourier_quadrature(eta, point, n=n)
        values = raw.real if n % 2 == 0 else raw.imag
    return SampledField("qz", "q0", "phi", qz, q0, np.asarray(values, dtype=np.float64))
