"""The compiled and numpy kernels must agree; selection is by environment."""

import os
import subprocess
import sys

import numpy as np
import pytest

from wignerlab import kernels

compiled = pytest.mark.skipif(kernels.compiled is None, reason="extension not built")


@compiled
@pytest.mark.parametrize("n", [0, 1, 5, 31, 80])
def test_hermite_backends_agree(n, rng):
    x = rng.uniform(-12, 12, 500)
    np.testing.assert_allclose(kernels.compiled.hermite_functions(n, x), kernels.pure.hermite_functions(n, x),
                               rtol=1e-12, atol=1e-300)


@compiled
@pytest.mark.parametrize("n, eta", [(0, 0.0), (3, 1.5), (12, -2.0)])
def test_psi_backends_agree(n, eta, rng):
    z, t = rng.uniform(-10, 10, (2, 400))
    np.testing.assert_allclose(kernels.compiled.psi_points(n, eta, z, t), kernels.pure.psi_points(n, eta, z, t),
                               rtol=1e-12, atol=1e-300)


@compiled
@pytest.mark.parametrize("na, nb, nq", [(37, 23, 300), (600, 17, 13)])
def test_fourier_sum_backends_agree(na, nb, nq, rng):
    # the second shape crosses node tiles and leaves a partial q block
    f = rng.normal(size=(na, nb))
    a, b = rng.uniform(-3, 3, na), rng.uniform(-3, 3, nb)
    wa, wb = rng.uniform(-20, 20, (2, nq))
    c = kernels.compiled.fourier_tensor_sum(f, a, b, wa, wb)
    p = kernels.pure.fourier_tensor_sum(f, a, b, wa, wb)
    np.testing.assert_allclose(c, p, atol=1e-11)


def test_fourier_sum_against_direct_sum(rng):
    f = rng.normal(size=(5, 4))
    a, b = rng.normal(size=5), rng.normal(size=4)
    wa, wb = rng.normal(size=3), rng.normal(size=3)
    direct = [np.sum(f * np.exp(1j * (x * a[:, None] + y * b[None, :]))) for x, y in zip(wa, wb)]
    np.testing.assert_allclose(kernels.fourier_tensor_sum(f, a, b, wa, wb), direct, atol=1e-13)


def test_dispatch_shapes():
    z = np.zeros((3, 4))
    assert kernels.psi_points(0, 0.0, z, 0.0).shape == (3, 4)
    assert kernels.hermite_functions(2, np.ones((2, 5))).shape == (2, 5)


def test_env_forces_pure_backend():
    env = dict(os.environ, WIGNERLAB_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import wignerlab; print(wignerlab.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
