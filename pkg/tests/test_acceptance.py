"""Exit criteria. Each test prints one PASS/FAIL line with its measured value."""

import json
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from wignerlab import little_group as lg
from wignerlab.minkowski import PROTON_MASS_GEV, FourVector, dispersion, rapidity_from_energy
from wignerlab.observables import interaction_time_ratio, moments_quadrature, second_moments
from wignerlab.oscillator import OscillatorState, fkr_residual, norm_quadrature
from wignerlab.spectral import MomentumPoint, fourier_quadrature, momentum_grid, phi_ground

ETAS_MOMENTS = (0.0, 1.0, 2.0, 3.0)


@pytest.fixture
def verdict(capsys):
    def emit(number, title, passed, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {number:>2} {'PASS' if passed else 'FAIL'}  {title}: {detail}")
        assert passed, f"criterion {number} ({title}) failed: {detail}"
    return emit


def test_01_algebra_exact(verdict):
    start = time.perf_counter()
    g = lg.generator
    worst = 0
    for i in range(1, 4):
        for j in range(1, 4):
            expected = lg.GaussianMatrix.zeros()
            for k in range(1, 4):
                eps = (i - j) * (j - k) * (k - i) // 2
                expected = expected + 1j * eps * g(f"J{k}")
            worst = max(worst, lg.commutator(g(f"J{i}"), g(f"J{j}")).max_abs_difference(expected))
    worst = max(
        worst,
        lg.commutator(g("N1"), g("N2")).max_abs_difference(lg.GaussianMatrix.zeros()),
        lg.commutator(g("J3"), g("N1")).max_abs_difference(1j * g("N2")),
        lg.commutator(g("J3"), g("N2")).max_abs_difference(-1j * g("N1")),
    )
    e2 = lg.e2_generators()
    plane = lg.structure_constants([e2["L"], e2["Px"], e2["Py"]])
    little = lg.structure_constants([g("J3"), g("N1"), g("N2")])
    relabel = float(np.abs(plane - little).max())
    elapsed = time.perf_counter() - start
    verdict(1, "algebra exactness", worst == 0 and relabel == 0 and elapsed < 1.0,
            f"max integer error {worst}, relabeling error {relabel}, {elapsed:.3f}s")


def test_02_contraction(verdict):
    start = time.perf_counter()
    fits = [lg.contraction_fit("J2", eta, lg.B_G_B_INV) for eta in range(3, 11)]
    slope = lg.residual_decay_slope(fits)
    scale = fits[-1].fitted_scale
    elapsed = time.perf_counter() - start
    verdict(2, "contraction", abs(slope + 2.0) <= 0.02 and abs(scale + 0.5) <= 1e-6 and elapsed < 1.0,
            f"log-slope {slope:.6f}, scale at eta=10 {scale:.12f}, {elapsed:.3f}s")


def test_03_gauge_action(verdict):
    worst_fix = worst_shift = 0.0
    for omega in (0.5, 1.0, 7.0):
        p = FourVector.lightlike_z(omega).as_array()
        for name in ("N1", "N2"):
            for xi in (-2.5, 0.0, 0.3, 2.0):
                lam = lg.exp_generator(lg.generator(name), xi)
                worst_fix = max(worst_fix, float(np.abs(lam @ p - p).max()))
                for eps in ((1, 0, 0, 0), (0, 1, 0, 0), (0.6, -0.8, 0, 0)):
                    worst_shift = max(worst_shift, lg.gauge_shift_check(eps, p, xi, name))
    verdict(3, "gauge/little-group action", worst_fix <= 1e-12 and worst_shift <= 1e-12,
            f"invariance error {worst_fix:.2e}, gauge residual {worst_shift:.2e}")


def test_04_normalization(verdict):
    start = time.perf_counter()
    worst = max(
        abs(norm_quadrature(OscillatorState(n, eta)) - 1.0)
        for n in range(9)
        for eta in (0.0, 0.5, 1.0, 2.0, 3.0)
    )
    elapsed = time.perf_counter() - start
    verdict(4, "oscillator normalization", worst <= 1e-8 and elapsed < 30.0,
            f"max |norm - 1| {worst:.2e}, {elapsed:.3f}s")


def test_05_residual_order(verdict):
    orders = {n: math.log2(fkr_residual(n, 0.1) / fkr_residual(n, 0.05)) for n in (0, 1, 2)}
    ok = all(abs(o - 2.0) <= 0.1 for o in orders.values())
    verdict(5, "oscillator equation residual order", ok, ", ".join(f"n={n}: {o:.4f}" for n, o in orders.items()))


def test_06_fourier(verdict):
    qz, q0 = momentum_grid(4.0, (41, 41))
    q = MomentumPoint(*np.meshgrid(qz, q0, indexing="ij"))
    dev = imag = 0.0
    for eta in (0.0, 1.0, 2.0):
        num = fourier_quadrature(eta, q)
        dev = max(dev, float(np.abs(num - phi_ground(eta, q)).max()))
        imag = max(imag, float(np.abs(num.imag).max()))
    verdict(6, "Fourier consistency", dev <= 1e-6 and imag <= 1e-10,
            f"max |delta| {dev:.2e}, max |imag| {imag:.2e}")


def test_07_z_qz_product(verdict):
    worst_a = worst_q = 0.0
    for eta in ETAS_MOMENTS:
        exact = math.cosh(2 * eta) ** 2 / 4
        worst_a = max(worst_a, abs(second_moments(eta).product_z_qz / exact - 1))
        worst_q = max(worst_q, abs(moments_quadrature(eta).product_z_qz / exact - 1))
    at1 = second_moments(1.0).product_z_qz
    ok = worst_a <= 1e-15 and worst_q <= 1e-6 and abs(at1 - 3.538529) <= 1e-5
    verdict(7, "<z^2><q_z^2> = cosh^2(2 eta)/4", ok,
            f"analytic rel {worst_a:.1e}, quadrature rel {worst_q:.2e}, eta=1 value {at1:.7f}")


def test_08_lightcone_products(verdict):
    worst_a = worst_q = 0.0
    for eta in ETAS_MOMENTS:
        a, q = second_moments(eta), moments_quadrature(eta)
        worst_a = max(worst_a, abs(a.product_u_qu - 0.25), abs(a.product_v_qv - 0.25))
        worst_q = max(worst_q, abs(q.product_u_qu - 0.25), abs(q.product_v_qv - 0.25))
    verdict(8, "<u^2><q_u^2> = <v^2><q_v^2> = 1/4", worst_a <= 1e-12 and worst_q <= 1e-6,
            f"analytic {worst_a:.1e}, quadrature {worst_q:.2e}")


def test_09_fermilab(verdict):
    ratio = interaction_time_ratio(rapidity_from_energy(PROTON_MASS_GEV, 900.0).eta)
    ok = abs(ratio / 2.7e-7 - 1) <= 0.05 and abs(math.log10(ratio) - math.log10(1e-6)) <= 1
    verdict(9, "Fermilab time ratio", ok, f"ratio {ratio:.4e} (expected order 1e-6)")


def test_10_dispersion(verdict):
    fast = dispersion(0.01, 1.0)
    slow = dispersion(1.0, 0.01)
    e_fast = abs(fast.energy - fast.momentum) / fast.momentum
    e_slow = abs(slow.energy - slow.mass - slow.momentum**2 / (2 * slow.mass)) / slow.mass
    verdict(10, "dispersion limits", e_fast <= 1e-4 and e_slow <= 1e-8,
            f"|E-p|/p {e_fast:.2e}, |E-m-p^2/2m|/m {e_slow:.2e}")


def test_11_determinism(verdict, tmp_path):
    commands = (
        ["wavefunction", "--n", "3", "--eta", "1", "--grid", "41x41"],
        ["wavefunction", "--eta", "2", "--momentum", "--grid", "41x41"],
        ["moments", "--eta", "0", "1", "2"],
        ["parton", "--eta", "0.5"],
    )
    identical = True
    for i, argv in enumerate(commands):
        blobs = []
        for run in range(2):
            path = tmp_path / f"{i}-{run}"
            subprocess.run([sys.executable, "-m", "wignerlab", *argv, "--out", str(path)], check=True)
            blobs.append(path.read_bytes())
        identical &= blobs[0] == blobs[1]
    report = subprocess.run([sys.executable, "-m", "wignerlab", "verify", "algebra"], capture_output=True)
    again = subprocess.run([sys.executable, "-m", "wignerlab", "verify", "algebra"], capture_output=True)
    identical &= report.stdout == again.stdout and all(json.loads(l)["passed"] for l in report.stdout.splitlines())
    verdict(11, "determinism", identical, f"{len(commands)} data files and one report stream byte-identical")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
