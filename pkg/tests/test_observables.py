import json
import math

import numpy as np
import pytest
import scipy.integrate
from hypothesis import given
from hypothesis import strategies as st

from wignerlab.errors import DomainError, EnvelopeError
from wignerlab.minkowski import PROTON_MASS_GEV, rapidity_from_energy
from wignerlab.observables import (
    MOMENT_FIELDS,
    MomentReport,
    interaction_time_ratio,
    longitudinal_density,
    moments_quadrature,
    parton_summary,
    second_moments,
)


def test_rest_frame_moments():
    m = second_moments(0.0)
    for name in MOMENT_FIELDS[1:9]:
        assert getattr(m, name) == 0.5
    assert (m.product_z_qz, m.product_u_qu, m.product_v_qv) == (0.25, 0.25, 0.25)


def test_eta1_values():
    m = second_moments(1.0)
    # mpmath cosh(2)**2/4
    assert m.product_z_qz == pytest.approx(3.5385291045020608, rel=1e-14)
    assert m.product_u_qu == 0.25


@given(st.floats(-5, 5))
def test_closed_form_identities(eta):
    m = second_moments(eta)
    assert m.product_z_qz == pytest.approx(math.cosh(2 * eta) ** 2 / 4, rel=1e-14)
    assert abs(m.product_u_qu - 0.25) <= 1e-12
    assert abs(m.product_v_qv - 0.25) <= 1e-12
    assert interaction_time_ratio(abs(eta)) == pytest.approx(2 * second_moments(abs(eta)).var_qu, rel=1e-14)


def test_widths_increase_with_rapidity():
    etas = np.linspace(0, 4, 41)
    for name in ("var_z", "var_qz"):
        values = [getattr(second_moments(e), name) for e in etas]
        assert np.all(np.diff(values) > 0)
        assert getattr(second_moments(-2.0), name) == getattr(second_moments(2.0), name)


@pytest.mark.parametrize("eta", [0.0, 0.5, 1.0, 2.0, 3.0, -1.0])
def test_quadrature_agrees(eta):
    a, q = second_moments(eta).to_dict(), moments_quadrature(eta).to_dict()
    for k in MOMENT_FIELDS[1:]:
        assert q[k] == pytest.approx(a[k], rel=1e-6), k


def test_quadrature_examples():
    assert moments_quadrature(0.0).var_z == pytest.approx(0.5, abs=1e-8)
    assert abs(moments_quadrature(2.0).var_u / (math.exp(4) / 2) - 1) <= 1e-6


def test_quadrature_var_z_against_adaptive_oracle():
    eta = 1.0
    c = math.cosh(2 * eta)
    # marginal in z is a Gaussian of variance cosh(2 eta)/2; integrate x^2 rho numerically
    val, _ = scipy.integrate.quad(lambda x: x * x * longitudinal_density(eta, "z", x), -np.inf, np.inf, epsabs=1e-12)
    assert val == pytest.approx(c / 2, rel=1e-10)
    assert moments_quadrature(eta).var_z == pytest.approx(val, rel=1e-8)


def test_quadrature_envelope():
    with pytest.raises(EnvelopeError):
        moments_quadrature(4.1)


def test_report_json_field_names():
    d = json.loads(json.dumps(second_moments(0.3).to_dict()))
    assert tuple(d) == MOMENT_FIELDS


def test_report_products_derived():
    r = MomentReport.from_variances(0.0, 1, 2, 3, 4, 5, 6, 7, 8)
    assert (r.product_z_qz, r.product_u_qu, r.product_v_qv) == (5, 21, 32)


def test_time_ratio():
    assert interaction_time_ratio(0.0) == 1.0
    a, b = 0.7, 1.9
    assert interaction_time_ratio(a + b) == pytest.approx(interaction_time_ratio(a) * interaction_time_ratio(b), rel=1e-14)
    with pytest.raises(DomainError):
        interaction_time_ratio(-0.1)


def test_fermilab_ratio():
    ratio = interaction_time_ratio(rapidity_from_energy(PROTON_MASS_GEV, 900.0).eta)
    # mpmath exp(-2 acosh(900/0.938))
    assert ratio == pytest.approx(2.7155693760973744e-07, rel=1e-12)
    assert abs(math.log10(ratio) + 6) < 1


def test_density_values():
    assert longitudinal_density(0.0, "z", 0.0) == pytest.approx(0.5641895835477563, rel=1e-15)
    x = np.linspace(-2, 2, 9)
    np.testing.assert_array_equal(longitudinal_density(1.3, "z", x), longitudinal_density(1.3, "q_z", x))
    with pytest.raises(ValueError):
        longitudinal_density(0.0, "t", 0.0)


@pytest.mark.parametrize("eta", [0.0, 1.0, 2.0, 4.0])
def test_density_normalized(eta):
    val, _ = scipy.integrate.quad(lambda x: longitudinal_density(eta, "z", x), -np.inf, np.inf, epsabs=1e-13)
    assert val == pytest.approx(1.0, abs=1e-8)


def test_density_width_ratios():
    widths = []
    for eta in (0.0, 1.0, 2.0):
        var, _ = scipy.integrate.quad(lambda x: x * x * longitudinal_density(eta, "q_z", x), -np.inf, np.inf)
        widths.append(math.sqrt(var))
    np.testing.assert_allclose(np.array(widths) / widths[0], [1, math.sqrt(math.cosh(2)), math.sqrt(math.cosh(4))], rtol=1e-8)


def test_density_is_marginal_of_ground_state():
    # integrate psi^2 over t at fixed z with the adaptive oracle
    from wignerlab.oscillator import OscillatorState, psi

    eta, z = 1.2, 0.8
    L = 10 * math.exp(eta)
    val, _ = scipy.integrate.quad(lambda t: psi(OscillatorState(0, eta), z, t) ** 2, -L, L, epsabs=1e-13, limit=200)
    assert val == pytest.approx(longitudinal_density(eta, "z", z), rel=1e-9)


def test_parton_summary():
    s = parton_summary(eta=0.0)
    assert (s.time_ratio, s.var_z, s.var_qz) == (1.0, 0.5, 0.5)
    s = parton_summary(energy=900.0, mass=PROTON_MASS_GEV)
    assert s.eta == pytest.approx(7.5595470023032677, rel=1e-14)
    with pytest.raises(DomainError):
        parton_summary(energy=1.0, mass=2.0)
    with pytest.raises(DomainError):
        parton_summary()
