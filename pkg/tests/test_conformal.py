# pylint: disable=

"""
Conformal Tests
---------------

This module tests the conformal coordinate maps, the complex derivative operators and their checks.
"""

from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays
import numpy as np
import pytest

from qhoconf.define import ZeroEnergy, OffManifold, StencilOutOfDomain, D_DS, D_DZ, D_DZ_STAR, D_DZETA, \
    FORM_CHAIN
from qhoconf.physics.conformal import forward_map, conjugate_map, inverse_map, inverse_conjugate_map, \
    imaginary_shift, ConformalPoint, Field, eigen_field, DerivativeOperator, apply_derivative, compose, \
    hamiltonian_conformal, sample_points, map_energy, coordinate_independence_check, cr_residual, \
    operator_identity_check, concise_schrodinger_check, energy_derivative_check, free_field_reduction_check, \
    time_replacement_check
from qhoconf.physics.eigenfunctions import time_phase, psi_real
from qhoconf.physics.states import OscillatorParams, StateLabel, potential_energy


finite = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)


@given(arrays(np.float64, 3, elements=finite), finite, st.floats(min_value=0.1, max_value=10.0))
def test_roundtrip(x, t, energy):
    params = OscillatorParams.natural()
    z, s = forward_map(x, t, energy, params)
    back_x, back_t = inverse_map(z, s, energy, params)
    np.testing.assert_array_equal(back_x, x)
    assert back_t == pytest.approx(t, abs=1e-12 * max(1.0, abs(s)))

    z_star, s_star = conjugate_map(x, t, energy, params)
    assert s_star == np.conj(s)
    conj_x, conj_t = inverse_conjugate_map(z_star, s_star, energy, params)
    np.testing.assert_array_equal(conj_x, x)
    assert conj_t == pytest.approx(t, abs=1e-12 * max(1.0, abs(s)))


def test_forward_map_values(natural):
    z, s = forward_map(np.array([1.0, 2.0, 2.0]), 0.5, 1.5, natural)
    np.testing.assert_array_equal(z, [1.0, 2.0, 2.0])
    assert s == pytest.approx(0.5 - 3.0j)
    assert imaginary_shift(1.5, natural) == pytest.approx(1.0 / 3.0)


def test_zero_energy(natural):
    with pytest.raises(ZeroEnergy):
        forward_map(np.zeros(3), 0.0, 0.0, natural)


def test_off_manifold(natural):
    with pytest.raises(OffManifold):
        inverse_map(np.array([1.0, 0.0, 0.0]), 0.3 + 0.1j, 1.5, natural)


def test_free_field_map_is_identity(free):
    x, t = sample_points(100, free, 7)
    z, s = forward_map(x, t, 1.0, free)
    np.testing.assert_array_equal(z, x)
    np.testing.assert_array_equal(np.real(s), t)
    assert not np.any(np.imag(s))


@pytest.mark.parametrize('omega', [1e-1, 1e-3, 1e-6, 1e-9])
def test_imaginary_shift_vanishes_linearly(omega):
    # at fixed E, Im(s) = -(m omega / 2E) x^2
    x = np.array([1.0, -2.0, 0.5])
    _, s = forward_map(x, 0.3, 1.0, OscillatorParams(omega=omega))

    assert s.real == 0.3
    assert s.imag / omega == pytest.approx(-0.5 * 5.25, rel=1e-14)


def test_conformal_point(natural):
    point = ConformalPoint.from_real([0.0, 1.0, 0.0], 0.2, 2.5, natural)
    assert point.s == pytest.approx(0.2 - 0.2j)
    z_star, s_star = point.conjugate
    assert s_star == pytest.approx(0.2 + 0.2j)
    np.testing.assert_array_equal(z_star, point.z)


def test_map_energy(natural, free):
    assert map_energy(StateLabel(1, 0, 0), natural) == 2.5
    assert map_energy(StateLabel(1, 0, 0), free) == 1.0


def test_operator_validation(natural):
    with pytest.raises(ValueError):
        DerivativeOperator('d_dw', natural, axis=1)
    with pytest.raises(ValueError):
        DerivativeOperator(D_DZ, natural)
    with pytest.raises(ZeroEnergy):
        DerivativeOperator(D_DZ, natural, 0.0, 1, FORM_CHAIN)
    assert DerivativeOperator(D_DZ_STAR, natural, axis=2).sign == -1.0


def test_energy_form_on_gaussian(natural):
    # d/dz_1 exp(-x^2 / 2) = -x1 g + x1 g = 0 in natural units
    def gauss(x, t):
        return np.exp(-0.5 * np.sum(np.asarray(x) ** 2, axis=-1)) + 0j

    x = np.array([[0.3, -0.2, 1.0], [1.5, 0.0, -0.5]])
    value = apply_derivative(DerivativeOperator(D_DZ, natural, axis=1), gauss, x, 0.0)
    np.testing.assert_allclose(value, 0.0, atol=1e-10)

    starred = apply_derivative(DerivativeOperator(D_DZ_STAR, natural, axis=1), gauss, x, 0.0)
    np.testing.assert_allclose(starred, -2.0 * x[:, 0] * gauss(x, 0.0), atol=1e-10)


def test_zeta_scaling(scaled):
    field = eigen_field(StateLabel(2, 0, 0), scaled)
    x = np.array([[0.1, 0.2, 0.3]])
    z_value = apply_derivative(DerivativeOperator(D_DZ, scaled, axis=1), field, x, 0.0)
    zeta_value = apply_derivative(DerivativeOperator(D_DZETA, scaled, axis=1), field, x, 0.0)
    np.testing.assert_allclose(zeta_value * scaled.kappa, z_value, rtol=1e-14)


def test_time_derivative_operator(natural):
    state = StateLabel(0, 1, 0)
    field = Field(lambda x, t: psi_real(state, x, t, natural))
    x = np.array([[0.5, -0.5, 0.25]])
    value = apply_derivative(DerivativeOperator(D_DS, natural), field, x, 0.4)
    expected = -1j * 2.5 * psi_real(state, x, 0.4, natural)
    np.testing.assert_allclose(value, expected, rtol=1e-9)


def test_compose_matches_exact_field(natural):
    state = StateLabel(1, 0, 0)
    x = np.array([[0.4, 0.1, -0.3]])
    exact = eigen_field(state, natural)
    numeric = Field(lambda y, t: psi_real(state, y, t, natural))
    op = DerivativeOperator(D_DZ, natural, axis=1)
    np.testing.assert_allclose(compose(op, numeric)(x, 0.0), compose(op, exact)(x, 0.0), atol=1e-10)


def test_sampled_field():
    axis = np.linspace(-1.0, 1.0, 21)
    times = np.linspace(0.0, 1.0, 11)
    grid = np.meshgrid(axis, axis, axis, times, indexing='ij')
    field = Field.from_samples((axis, axis, axis, times), 2.0 * grid[0] + 3.0 * grid[3])

    x = np.array([[0.2, 0.0, 0.0]])
    assert field.partial_x(x, 0.5, 1, None)[0] == pytest.approx(2.0)
    assert field.partial_t(x, 0.5, None)[0] == pytest.approx(3.0)

    with pytest.raises(StencilOutOfDomain):
        field.partial_x(np.array([[1.0, 0.0, 0.0]]), 0.5, 1, None)

    with pytest.raises(ValueError):
        Field.from_samples((np.array([0.0, 1.0, 3.0]), axis, axis, times), np.zeros((3, 21, 21, 11)))


def test_coordinate_independence(natural):
    x, t = sample_points(100, natural, 11)
    report = coordinate_independence_check(natural, 1.5, x, t)
    assert report.passed
    assert len(report.details['maxima']) == 12


def test_cauchy_riemann_holomorphic(natural):
    energy = 1.5
    t_values = np.linspace(0.0, 2.0 * np.pi / energy, 21)
    u_values = np.linspace(0.0, 4.0, 21)
    report = cr_residual(lambda s: time_phase(energy, s, natural), energy, natural, t_values, u_values,
                         step=1e-2 / energy)
    assert report.passed
    assert report.details['convergence_order'] == pytest.approx(2.0, abs=0.3)
    assert report.details['second_order_residual'] < 1e-2


def test_cauchy_riemann_conjugate(natural):
    report = cr_residual(np.conj, 1.5, natural, np.linspace(0.0, 1.0, 5), np.linspace(0.0, 1.0, 5))
    assert not report.passed
    assert report.details['standard_residual_min'] == pytest.approx(2.0)
    assert not report.details['holomorphic']


def test_operator_identity(natural, scaled):
    report = operator_identity_check(natural, count=5)
    assert report.passed
    assert report.details['z_path_potential_evaluations'] == 0

    assert operator_identity_check(scaled, count=3, energy=2.0).passed


def test_concise_schrodinger_never_evaluates_potential(natural):
    before = potential_energy.calls
    report = concise_schrodinger_check(StateLabel(1, 1, 0), natural)
    assert report.passed
    assert report.details['potential_evaluations'] == 0
    assert potential_energy.calls == before


def test_concise_schrodinger_scaled(scaled):
    assert concise_schrodinger_check(StateLabel(0, 0, 2), scaled).passed


def test_energy_derivative(natural):
    report = energy_derivative_check(StateLabel(2, 1, 0), natural)
    assert report.passed
    assert set(report.details['deviations']) == {'d_ds', 'd_ds_star'}
    assert report.details['exact_derivative_deviation'] < 1e-14


def test_free_field_reduction(natural):
    report = free_field_reduction_check(natural)
    assert report.passed
    assert report.details['map_deviation'] == 0.0


def test_time_replacement(scaled):
    agreement, solution = time_replacement_check(StateLabel(1, 0, 1), scaled)
    assert agreement.passed
    assert solution.passed
    assert solution.name == 'replacement eq11 (1,0,1)'


def test_free_field_skips(free):
    assert concise_schrodinger_check(StateLabel(), free).skipped
    assert energy_derivative_check(StateLabel(), free).skipped
    assert all(report.skipped for report in time_replacement_check(StateLabel(), free))
