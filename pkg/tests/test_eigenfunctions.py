# pylint: disable=

"""
Eigenfunction Tests
-------------------

This module tests the real and conformal eigenfunctions and their checks.
"""

import math

from hypothesis import given, settings as hypothesis_settings, strategies as st
import numpy as np
import pytest

from qhoconf.define import PAPER_NORM
from qhoconf.physics.eigenfunctions import k_l, phi, phi_derivative, theta, psi_real, psi_conformal, \
    psi_laplacian, psi_laplacian_fd, psi_gradient, Eigenfunction1D, Eigenfunction3D, ConformalEigenfunction, \
    schrodinger_residual, time_derivative_check, orthonormality_check, hermite_orthogonality_check, \
    norm_discrepancy_check, turning_extent, cube_grid
from qhoconf.physics.hermite import hermite_at_zero
from qhoconf.physics.states import OscillatorParams, StateLabel, energy_of, states_up_to


def _params():
    return OscillatorParams(hbar=0.5, mass=2.0, omega=1.5)


def test_ground_state(natural):
    assert phi(0, 0.0, natural) == pytest.approx(math.pi ** -0.25)
    assert phi(1, 1.0, natural) == pytest.approx(math.pi ** -0.25 * math.sqrt(2.0) * math.exp(-0.5))


def test_norms(scaled):
    for l in range(11):
        assert Eigenfunction1D(l, scaled).norm() == pytest.approx(1.0, abs=1e-12)
        paper = Eigenfunction1D(l, scaled, PAPER_NORM).norm()
        assert paper == pytest.approx(math.sqrt(2.0 * math.pi), rel=1e-12)


def test_node_count(natural):
    for l in range(8):
        assert Eigenfunction1D(l, natural).node_count() == l


@given(st.integers(min_value=0, max_value=20))
def test_paper_norm_ratio(l):
    ratio = k_l(l, _params(), PAPER_NORM) / k_l(l, _params())
    assert ratio == pytest.approx((2.0 * math.pi) ** 0.25, rel=1e-14)


def test_theta_at_origin(scaled):
    for l in range(10):
        assert theta(l, 0.0, scaled) == pytest.approx(k_l(l, scaled) * hermite_at_zero(l), abs=1e-15)


def test_derivatives_against_finite_differences(scaled):
    x = np.linspace(-2.0, 2.0, 7)
    h = 1e-5
    for l in range(6):
        numeric = (phi(l, x + h, scaled) - phi(l, x - h, scaled)) / (2.0 * h)
        np.testing.assert_allclose(phi_derivative(l, x, scaled), numeric, atol=1e-7)

    with pytest.raises(ValueError):
        phi_derivative(1, x, scaled, order=3)


def test_conformal_factorization(natural):
    state = StateLabel(1, 2, 0)
    x = np.array([0.3, -0.4, 1.1])
    t = 0.25
    energy = float(energy_of(state, natural))
    s = t - 1j * natural.mass * natural.omega / (2.0 * energy) * np.sum(x ** 2)

    assert psi_conformal(state, x, s, natural) == pytest.approx(psi_real(state, x, t, natural), rel=1e-13)
    expected = Eigenfunction3D(state, natural)(x, t)
    assert ConformalEigenfunction(state, natural)(x, s) == pytest.approx(expected)


def test_laplacian_paths_agree(natural):
    state = StateLabel(2, 0, 1)
    x = cube_grid(2.0, 5, natural)
    analytic = psi_laplacian(state, x, 0.0, natural)
    numeric = psi_laplacian_fd(state, x, 0.0, natural)
    assert np.max(np.abs(analytic - numeric)) < 1e-6 * np.max(np.abs(analytic))


def test_gradient(natural):
    state = StateLabel(1, 0, 2)
    x = np.array([[0.2, 0.5, -0.7]])
    h = 1e-6
    shift = np.array([[0.0, h, 0.0]])
    numeric = (psi_real(state, x + shift, 0.1, natural) - psi_real(state, x - shift, 0.1, natural)) / (2 * h)
    np.testing.assert_allclose(psi_gradient(state, x, 0.1, natural, 2), numeric, atol=1e-8)


def test_turning_extent():
    assert turning_extent(StateLabel()) == 4.0
    assert turning_extent(StateLabel(1, 1, 2)) == 6.0


@pytest.mark.parametrize('path', ['analytic', 'finite_difference'])
def test_schrodinger_residual(natural, path):
    for state in states_up_to(2):
        report = schrodinger_residual(state, natural, path=path)
        assert report.passed, report.to_text(verbose=True)
        assert report.name == 'eq11 %s %s' % (path, state)


@hypothesis_settings(max_examples=10, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4))
def test_schrodinger_residual_in_other_units(l1, l3):
    report = schrodinger_residual(StateLabel(l1, 0, l3), _params())
    assert report.passed


def test_time_derivative(scaled):
    report = time_derivative_check(StateLabel(1, 1, 0), scaled)
    assert report.passed
    assert report.details['closed_form_deviation'] < 1e-14


def test_orthonormality(natural):
    report = orthonormality_check(natural)
    assert report.passed
    assert report.details['node_counts_match']

    paper = orthonormality_check(natural, norm_mode=PAPER_NORM)
    assert paper.passed
    assert paper.details['expected_diagonal'] == pytest.approx(math.sqrt(2.0 * math.pi))

    assert hermite_orthogonality_check().passed


def test_norm_discrepancy(natural):
    report = norm_discrepancy_check(natural)
    assert report.passed
    assert report.details['paper_norm_squared_l0'] == pytest.approx(math.sqrt(2.0 * math.pi))


def test_free_field_skips(free):
    for report in (schrodinger_residual(StateLabel(), free), time_derivative_check(StateLabel(), free),
                   orthonormality_check(free), norm_discrepancy_check(free)):
        assert report.skipped
        assert report.details['reason'] == 'requires omega > 0'
