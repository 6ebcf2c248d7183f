"""Named verification suites run by ``wignerlab verify``.

Each check yields a :class:`VerificationReport`; a report passes exactly when
its measured error does not exceed its tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import little_group as lg
from .minkowski import PROTON_MASS_GEV, FourVector, boost_z, dispersion, rapidity_from_energy
from .observables import interaction_time_ratio, moments_quadrature, second_moments
from .oscillator import OscillatorState, fkr_residual, integrate_squeezed, norm_quadrature, overlap
from .spectral import MomentumPoint, fourier_quadrature, momentum_grid, phi_ground

SUITES = ("algebra", "contraction", "oscillator", "spectral", "moments")


@dataclass(frozen=True)
class VerificationReport:
    check_name: str
    measured_error: float
    tolerance: float
    parameters: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.measured_error <= self.tolerance)

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "parameters": self.parameters,
            "measured_error": float(self.measured_error),
            "tolerance": float(self.tolerance),
            "passed": self.passed,
        }


def _levi_civita(i, j, k):
    return (i - j) * (j - k) * (k - i) // 2


def algebra_checks():
    g = lg.generator
    for i in range(1, 4):
        for j in range(1, 4):
            expected = lg.GaussianMatrix.zeros()
            for k in range(1, 4):
                expected = expected + 1j * _levi_civita(i, j, k) * g(f"J{k}")
            err = lg.commutator(g(f"J{i}"), g(f"J{j}")).max_abs_difference(expected)
            yield VerificationReport("o3_commutator", err, 0, {"i": i, "j": j})

    relations = [
        ("[N1,N2]=0", lg.commutator(g("N1"), g("N2")), lg.GaussianMatrix.zeros()),
        ("[J3,N1]=iN2", lg.commutator(g("J3"), g("N1")), 1j * g("N2")),
        ("[J3,N2]=-iN1", lg.commutator(g("J3"), g("N2")), -1j * g("N1")),
    ]
    for name, lhs, rhs in relations:
        yield VerificationReport("e2_like_commutator", lhs.max_abs_difference(rhs), 0, {"relation": name})

    e2 = lg.e2_generators()
    little = lg.structure_constants([g("J3"), g("N1"), g("N2")])
    plane = lg.structure_constants([e2["L"], e2["Px"], e2["Py"]])
    yield VerificationReport(
        "e2_relabeling", float(np.abs(little - plane).max()), 0, {"map": "J3->L, N1->Px, N2->Py"}
    )

    yield VerificationReport("n1_from_k1_j2", g("N1").max_abs_difference(g("K1") - g("J2")), 0)
    yield VerificationReport("n2_from_k2_j1", g("N2").max_abs_difference(g("K2") + g("J1")), 0)
    for name in ("N1", "N2"):
        cube = g(name) @ g(name) @ g(name)
        yield VerificationReport("nilpotent_cube", cube.max_abs_difference(lg.GaussianMatrix.zeros()), 0,
                                 {"generator": name})

    # gauge and little-group action on a massless momentum
    p = FourVector.lightlike_z(1.0).as_array()
    for name in ("N1", "N2"):
        for xi in (0.5, 2.0, -3.0):
            lam = lg.exp_generator(g(name), xi)
            err = float(np.abs(lam @ p - p).max())
            yield VerificationReport("null_rotation_fixes_momentum", err, 1e-12, {"generator": name, "xi": xi})
            for eps in ((1.0, 0.0, 0.0, 0.0), (0.0, 1.0, 0.0, 0.0)):
                res = lg.gauge_shift_check(eps, p, xi, name)
                yield VerificationReport("gauge_shift", res, 1e-12,
                                         {"generator": name, "xi": xi, "eps": list(eps)})

    # boosted rotations keep fixing the boosted rest momentum
    rest = FourVector.at_rest(1.0).as_array()
    for eta in (0.0, 1.0, 3.0):
        b = boost_z(eta)
        for name in ("J1", "J2", "J3"):
            lam = b @ lg.exp_generator(g(name), 0.7) @ boost_z(-eta)
            moved = b @ rest
            err = float(np.abs(lam @ moved - moved).max() / max(1.0, np.abs(moved).max()))
            yield VerificationReport("boosted_little_group", err, 1e-9, {"generator": name, "eta": eta})


def contraction_checks():
    etas = list(range(3, 11))
    for name in ("J2", "J1"):
        fits = [lg.contraction_fit(name, eta, lg.B_G_B_INV) for eta in etas]
        slope = lg.residual_decay_slope(fits)
        yield VerificationReport("contraction_decay_slope", abs(slope + 2.0), 0.02,
                                 {"generator": name, "slope": slope, "etas": etas})
        last = fits[-1]
        yield VerificationReport("contraction_scale", abs(last.fitted_scale + 0.5), 1e-6,
                                 {"generator": name, "eta": last.eta, "target": last.target,
                                  "fitted_scale": last.fitted_scale})
        scaled = np.array([f.residual_norm * math.exp(2 * f.eta) for f in fits])
        spread = float((scaled.max() - scaled.min()) / scaled.mean())
        yield VerificationReport("contraction_residual_scaled_constant", spread, 1e-3, {"generator": name})

    # boost conjugation is an algebra automorphism
    g = lg.generator
    for eta in (0.5, 2.0):
        for a, b in (("J1", "J2"), ("J2", "J3"), ("J3", "J1")):
            ca = lg.boost_conjugate(g(a), eta, lg.B_G_B_INV)
            cb = lg.boost_conjugate(g(b), eta, lg.B_G_B_INV)
            cc = lg.boost_conjugate(lg.commutator(g(a), g(b)), eta, lg.B_G_B_INV)
            err = float(np.abs(lg.commutator(ca, cb) - cc).max())
            yield VerificationReport("conjugation_preserves_algebra", err, 1e-10, {"pair": f"{a},{b}", "eta": eta})


def oscillator_checks():
    for n in range(9):
        for eta in (0.0, 0.5, 1.0, 2.0, 3.0):
            err = abs(norm_quadrature(OscillatorState(n, eta)) - 1.0)
            yield VerificationReport("oscillator_norm", err, 1e-8, {"n": n, "eta": eta})
    for n in (0, 1, 2):
        coarse, fine = fkr_residual(n, 0.1), fkr_residual(n, 0.05)
        order = math.log2(coarse / fine)
        yield VerificationReport("oscillator_equation_order", abs(order - 2.0), 0.1,
                                 {"n": n, "order": order, "residual_h0.05": fine})
    for eta in (0.0, 1.0):
        worst = max(abs(overlap(m, k, eta) - (m == k)) for m in range(6) for k in range(m, 6))
        yield VerificationReport("oscillator_orthonormality", worst, 1e-7, {"eta": eta, "n_max": 5})


def spectral_checks():
    qz, q0 = momentum_grid(4.0, (41, 41))
    gz, g0 = np.meshgrid(qz, q0, indexing="ij")
    point = MomentumPoint(gz, g0)
    for eta in (0.0, 1.0, 2.0):
        numeric = fourier_quadrature(eta, point)
        closed = phi_ground(eta, point)
        yield VerificationReport("fourier_vs_closed_form", float(np.abs(numeric - closed).max()), 1e-6,
                                 {"eta": eta, "grid": "41x41", "range": 4.0})
        yield VerificationReport("fourier_imaginary_part", float(np.abs(numeric.imag).max()), 1e-10,
                                 {"eta": eta})
        # in (q_z, q_0) the roles of u, v are taken by q_v, q_u, so the
        # position-space squeeze-adapted rule applies unchanged
        norm = integrate_squeezed(lambda a, b: phi_ground(eta, MomentumPoint(a, b)) ** 2, eta)
        yield VerificationReport("plancherel_norm", abs(norm - 1.0), 1e-7, {"eta": eta})


def moments_checks():
    for eta in (0.0, 1.0, 2.0, 3.0):
        exact = math.cosh(2 * eta) ** 2 / 4
        a = second_moments(eta)
        q = moments_quadrature(eta)
        yield VerificationReport("z_qz_product_analytic", abs(a.product_z_qz - exact), 1e-12 * exact, {"eta": eta})
        yield VerificationReport("z_qz_product_quadrature", abs(q.product_z_qz / exact - 1), 1e-6, {"eta": eta})
        for label, av, qv in (("u_qu", a.product_u_qu, q.product_u_qu), ("v_qv", a.product_v_qv, q.product_v_qv)):
            yield VerificationReport(f"{label}_product_analytic", abs(av - 0.25), 1e-12, {"eta": eta})
            yield VerificationReport(f"{label}_product_quadrature", abs(qv - 0.25), 1e-6, {"eta": eta})
    value = second_moments(1.0).product_z_qz
    yield VerificationReport("z_qz_product_eta1", abs(value - 3.538529), 1e-5, {"value": value})

    eta = rapidity_from_energy(PROTON_MASS_GEV, 900.0).eta
    ratio = interaction_time_ratio(eta)
    yield VerificationReport("fermilab_time_ratio", abs(ratio / 2.7e-7 - 1), 0.05,
                             {"mass": PROTON_MASS_GEV, "energy": 900.0, "eta": eta, "ratio": ratio})
    yield VerificationReport("fermilab_order_of_magnitude", abs(math.log10(ratio) + 6.0), 1.0,
                             {"expected_order": 1e-6, "ratio": ratio})

    fast = dispersion(0.01, 1.0)
    yield VerificationReport("dispersion_massless_limit", abs(fast.energy - fast.momentum) / fast.momentum, 1e-4,
                             {"m_over_p": 0.01})
    slow = dispersion(1.0, 0.01)
    yield VerificationReport("dispersion_slow_limit", abs(slow.energy - slow.nonrelativistic) / slow.mass, 1e-8,
                             {"p_over_m": 0.01})


_RUNNERS = {
    "algebra": algebra_checks,
    "contraction": contraction_checks,
    "oscillator": oscillator_checks,
    "spectral": spectral_checks,
    "moments": moments_checks,
}


def run_suite(name: str):
    """Yield the reports of one suite, or of all of them for ``"all"``."""
    if name == "all":
        for suite in SUITES:
            yield from _RUNNERS[suite]()
        return
    try:
        runner = _RUNNERS[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; expected one of {SUITES + ('all',)}") from None
    yield from runner()
