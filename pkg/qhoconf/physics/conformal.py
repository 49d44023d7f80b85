# pylint: disable=invalid-name, too-many-arguments, too-many-locals

"""
Conformal Module
----------------

This module contains the isometric conformal map z_i = x_i, s = t - i (m omega / 2E) x^2, its conjugate
and inverses, the chain rule derivative operators of the complex coordinates and the checks that the
coordinates are independent and that functions of s are holomorphic.

The Cauchy-Riemann equations are evaluated in the standard orientation g_t = h_y, g_y = -h_t for
s = t + iy; the printed orientation with the opposite sign pairing is reported alongside.
"""

from collections import OrderedDict
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.polynomial import polyval3d
from scipy.interpolate import RegularGridInterpolator

from qhoconf import settings
from qhoconf.debugging import ModuleLogger, qhoconf_debug
from qhoconf.define import D_DS, D_DS_STAR, D_DZ, D_DZ_STAR, D_DZETA, D_DZETA_STAR, OPERATOR_KINDS, \
    FORM_CHAIN, FORM_ENERGY, OPERATOR_FORMS, UNIT_NORM, ZeroEnergy, OffManifold
from qhoconf.numerics import StencilSpec, differentiate, convergence_order
from qhoconf.physics.eigenfunctions import psi_real, psi_conformal, psi_gradient, psi_time_derivative, \
    time_phase, cube_grid, turning_extent, laplacian_fd, default_laplacian_spec
from qhoconf.physics.states import OscillatorParams, StateLabel, energy_of, potential_energy
from qhoconf.verification.report import CheckReport


# enabling logging
ModuleLogger()


def _energy_value(energy):
    """
    This function extracts a float energy and rejects zero.

    :param energy: Energy or float
    :return: float
    """

    value = float(energy)
    if value == 0.0:
        raise ZeroEnergy('the conformal map is undefined for E = 0')

    return value


def imaginary_shift(energy, params):
    """
    This function returns the coefficient m omega / 2E of x^2 in the imaginary time shift.

    :param energy: Energy or float
    :param params: OscillatorParams
    :return: coefficient
    """

    return params.mass * params.omega / (2.0 * _energy_value(energy))


def _square(x):
    """
    This function returns x^2 summed over the trailing axis of length 3.

    :param x: positions
    :return: squared radius
    """

    x = np.asarray(x, dtype=float)
    if x.shape[-1] != 3:
        raise ValueError('positions must have a trailing axis of length 3, got shape %r' % (x.shape,))

    return np.sum(x ** 2, axis=-1)


def forward_map(x, t, energy, params):
    """
    This function maps (x, t) to (z, s) with z = x and s = t - i (m omega / 2E) x^2.

    :param x: 3-vector or array of shape (..., 3)
    :param t: time
    :param energy: Energy or float
    :param params: OscillatorParams
    :return: z, s
    """

    shift = imaginary_shift(energy, params)
    z = np.array(x, dtype=float)

    return z, t - 1j * (shift * _square(z))


def conjugate_map(x, t, energy, params):
    """
    This function maps (x, t) to (z*, s*) with z* = x and s* = t + i (m omega / 2E) x^2.

    :param x: 3-vector or array of shape (..., 3)
    :param t: time
    :param energy: Energy or float
    :param params: OscillatorParams
    :return: z*, s*
    """

    shift = imaginary_shift(energy, params)
    z_star = np.array(x, dtype=float)

    return z_star, t + 1j * (shift * _square(z_star))


def _real_time(t, tolerance):
    """
    This function discards the imaginary residue of a reconstructed time after the manifold check.

    :param t: reconstructed complex time
    :param tolerance: absolute tolerance on the imaginary part
    :return: real time
    """

    residue = np.max(np.abs(np.imag(t))) if np.size(t) else 0.0
    if residue > tolerance:
        raise OffManifold(
            'reconstructed time has imaginary part %g > %g: (z, s) is not the image of real '
            'coordinates' % (residue, tolerance)
        )

    t = np.real(t)

    return float(t) if np.ndim(t) == 0 else t


def inverse_map(z, s, energy, params, tolerance=settings.MANIFOLD_TOLERANCE):
    """
    This function maps (z, s) back to (x, t) with x = z and t = s + i (m omega / 2E) z^2.

    :param z: conformal 3-vector or array of shape (..., 3)
    :param s: complex time
    :param energy: Energy or float
    :param params: OscillatorParams
    :param tolerance: absolute tolerance on Im(t)
    :return: x, t
    """

    shift = imaginary_shift(energy, params)
    x = np.array(z, dtype=float)

    return x, _real_time(s + 1j * (shift * _square(x)), tolerance)


def inverse_conjugate_map(z_star, s_star, energy, params, tolerance=settings.MANIFOLD_TOLERANCE):
    """
    This function maps (z*, s*) back to (x, t) with x = z* and t = s* - i (m omega / 2E) z^2.

    :param z_star: conjugate spatial 3-vector or array of shape (..., 3)
    :param s_star: conjugate complex time
    :param energy: Energy or float
    :param params: OscillatorParams
    :param tolerance: absolute tolerance on Im(t)
    :return: x, t
    """

    shift = imaginary_shift(energy, params)
    x = np.array(z_star, dtype=float)

    return x, _real_time(s_star - 1j * (shift * _square(x)), tolerance)


@dataclass(frozen=True, eq=False)
class ConformalPoint(object):
    """
    This class pairs the real coordinates of one event with its conformal image.
    """

    x: np.ndarray
    t: float
    z: np.ndarray
    s: complex
    energy: float
    params: OscillatorParams

    @classmethod
    def from_real(cls, x, t, energy, params):
        """
        This function maps a real event.

        :param x: 3-vector
        :param t: time
        :param energy: Energy or float
        :param params: OscillatorParams
        :return: ConformalPoint
        """

        z, s = forward_map(x, t, energy, params)

        return cls(np.array(x, dtype=float), t, z, complex(s), float(energy), params)

    @property
    def conjugate(self):
        """
        This function returns the conjugate coordinates (z*, s*).

        :return: z*, s*
        """

        return conjugate_map(self.x, self.t, self.energy, self.params)


class Field(object):
    """
    This class describes a scalar field over (x, t), either analytic (a vectorized callable with
    optional exact derivatives) or sampled on a regular grid of (x1, x2, x3, t).
    """

    def __init__(self, value, gradient=None, time_derivative=None, bounds=None, step=None,
                 richardson_levels=None):
        """
        This function initializes the field.

        :param value: callable (x, t) -> complex, x of shape (..., 3)
        :param gradient: optional callable (x, t, axis) -> exact d/dx_axis
        :param time_derivative: optional callable (x, t) -> exact d/dt
        :param bounds: optional ((lo, hi) x 3, (lo, hi)) domain of x and t
        :param step: optional fixed stencil step (sampled fields)
        :param richardson_levels: optional richardson levels (sampled fields use 0)
        :return: None
        """

        self.value = value
        self.gradient = gradient
        self.time_derivative = time_derivative
        self.bounds = bounds
        self.step = step
        self.richardson_levels = richardson_levels

    def __call__(self, x, t):
        return self.value(x, t)

    @classmethod
    def from_samples(cls, axes, samples):
        """
        This function builds a field from samples on a regular grid; derivatives use the grid nodes
        as stencil points.

        :param axes: four 1D arrays (x1, x2, x3, t), uniformly spaced
        :param samples: array of shape (len(x1), len(x2), len(x3), len(t))
        :return: Field
        """

        axes = tuple(np.asarray(axis, dtype=float) for axis in axes)
        spacings = [np.diff(axis) for axis in axes]

        for spacing in spacings:
            if spacing.size == 0 or not np.allclose(spacing, spacing[0]):
                raise ValueError('sampled fields need uniformly spaced axes with two or more points')

        interpolator = RegularGridInterpolator(axes, np.asarray(samples), method='linear')

        def value(x, t):
            x = np.asarray(x, dtype=float)
            t = np.broadcast_to(np.asarray(t, dtype=float), x.shape[:-1])
            return interpolator(np.concatenate([x, t[..., None]], axis=-1))

        bounds = (tuple((axis[0], axis[-1]) for axis in axes[:3]), (axes[3][0], axes[3][-1]))

        return cls(value, bounds=bounds, step=tuple(float(s[0]) for s in spacings), richardson_levels=0)

    def _spec(self, index, default_step):
        """
        This function returns the stencil of one variable.

        :param index: 0..2 for x_i, 3 for t
        :param default_step: step of analytic fields
        :return: StencilSpec
        """

        step = self.step[index] if self.step is not None else default_step
        levels = self.richardson_levels if self.richardson_levels is not None else settings.RICHARDSON_LEVELS

        return StencilSpec(step, levels, 1)

    def partial_x(self, x, t, axis, step):
        """
        This function returns d/dx_axis, exact when a gradient is supplied.

        :param x: positions of shape (..., 3)
        :param t: time
        :param axis: 1..3
        :param step: default stencil step
        :return: derivative
        """

        if self.gradient is not None:
            return self.gradient(x, t, axis)

        x = np.asarray(x, dtype=float)
        index = axis - 1

        def along(coordinate):
            shifted = np.array(x, dtype=float)
            shifted[..., index] = coordinate
            return self.value(shifted, t)

        domain = self.bounds[0][index] if self.bounds is not None else None

        return differentiate(along, x[..., index], self._spec(index, step), domain).value

    def partial_t(self, x, t, step):
        """
        This function returns d/dt, exact when a time derivative is supplied.

        :param x: positions of shape (..., 3)
        :param t: time
        :param step: default stencil step
        :return: derivative
        """

        if self.time_derivative is not None:
            return self.time_derivative(x, t)

        domain = self.bounds[1] if self.bounds is not None else None

        return differentiate(lambda time: self.value(x, time), t, self._spec(3, step), domain).value


def eigen_field(state, params, norm_mode=UNIT_NORM):
    """
    This function returns psi of one state as a field with exact derivatives.

    :param state: StateLabel
    :param params: OscillatorParams
    :param norm_mode: normalization mode
    :return: Field
    """

    return Field(
        lambda x, t: psi_real(state, x, t, params, norm_mode),
        gradient=lambda x, t, axis: psi_gradient(state, x, t, params, axis, norm_mode),
        time_derivative=lambda x, t: psi_time_derivative(state, x, t, params, norm_mode),
    )


@dataclass(frozen=True)
class DerivativeOperator(object):
    """
    This class describes one of the complex coordinate derivatives. The chain form keeps the time
    derivative of the chain rule; the energy form has i hbar d/dt replaced by E.
    """

    kind: str
    params: OscillatorParams
    energy: float = None
    axis: int = None
    form: str = FORM_ENERGY

    def __post_init__(self):
        if self.kind not in OPERATOR_KINDS:
            raise ValueError('unknown operator kind %r' % (self.kind,))

        if self.form not in OPERATOR_FORMS:
            raise ValueError('unknown operator form %r' % (self.form,))

        if self.kind not in (D_DS, D_DS_STAR) and self.axis not in (1, 2, 3):
            raise ValueError('spatial operators need an axis 1..3, got %r' % (self.axis,))

        if self.kind not in (D_DS, D_DS_STAR) and self.form == FORM_CHAIN:
            _energy_value(self.energy)

    @property
    def sign(self):
        """
        This function returns +1 for the unstarred and -1 for the starred spatial operators.

        :return: sign
        """

        return -1.0 if self.kind in (D_DZ_STAR, D_DZETA_STAR) else 1.0

    def __call__(self, field, x, t):
        return apply_derivative(self, field, x, t)


def _default_steps(params):
    """
    This function returns the stencil steps in length and time units.

    :param params: OscillatorParams
    :return: spatial step, time step
    """

    if params.omega > 0:
        return settings.STEP / params.kappa, settings.STEP / params.omega

    return settings.STEP, settings.STEP


def apply_derivative(op, field, x, t):
    """
    This function applies a complex coordinate derivative to a field at (x, t).

    :param op: DerivativeOperator
    :param field: Field or callable (x, t) -> complex
    :param x: position 3-vector or array of shape (..., 3)
    :param t: time
    :return: complex value
    """

    if not isinstance(field, Field):
        field = Field(field)

    params = op.params
    spatial_step, time_step = _default_steps(params)

    # d/ds = d/ds* = d/dt
    if op.kind in (D_DS, D_DS_STAR):
        return field.partial_t(x, t, time_step)

    x = np.asarray(x, dtype=float)
    coordinate = x[..., op.axis - 1]
    result = field.partial_x(x, t, op.axis, spatial_step)

    if op.form == FORM_CHAIN:
        factor = 1j * params.mass * params.omega * coordinate / _energy_value(op.energy)
        result = result + op.sign * factor * field.partial_t(x, t, time_step)
    else:
        result = result + op.sign * params.mass * params.omega / params.hbar * coordinate * field(x, t)

    if op.kind in (D_DZETA, D_DZETA_STAR):
        result = result / params.kappa

    return result


def compose(op, field):
    """
    This function returns the field op(field) so operators can be chained.

    :param op: DerivativeOperator
    :param field: Field or callable
    :return: Field
    """

    return Field(lambda x, t: apply_derivative(op, field, x, t))


def z_laplacian(field, x, t, params):
    """
    This function returns sum_i d/dz_i* d/dz_i applied to a field (energy form, central differences).
    The potential is never evaluated on this path.

    :param field: Field or callable
    :param x: positions of shape (..., 3)
    :param t: time
    :param params: OscillatorParams
    :return: complex value
    """

    total = 0.0
    for axis in (1, 2, 3):
        inner = compose(DerivativeOperator(D_DZ, params, axis=axis), field)
        total = total + apply_derivative(DerivativeOperator(D_DZ_STAR, params, axis=axis), inner, x, t)

    return total


def hamiltonian_conformal(field, x, t, params):
    """
    This function applies -(hbar^2 / 2m) sum_i d/dz_i* d/dz_i + (3/2) hbar omega to a field.

    :param field: Field or callable
    :param x: positions of shape (..., 3)
    :param t: time
    :param params: OscillatorParams
    :return: complex value
    """

    if not isinstance(field, Field):
        field = Field(field)

    laplacian = z_laplacian(field, x, t, params)

    kinetic = -params.hbar ** 2 / (2.0 * params.mass) * laplacian

    return kinetic + 1.5 * params.hbar * params.omega * field(x, t)


def coordinate_fields(energy, params):
    """
    This function returns z_i, s, z_i* and s* as fields over (x, t).

    :param energy: Energy or float
    :param params: OscillatorParams
    :return: dict of name -> Field
    """

    shift = imaginary_shift(energy, params)

    fields = OrderedDict()
    for axis in (1, 2, 3):
        fields['z%i' % axis] = Field(lambda x, t, index=axis - 1: np.asarray(x)[..., index] + 0j)
        fields['z%i*' % axis] = Field(lambda x, t, index=axis - 1: np.asarray(x)[..., index] + 0j)

    fields['s'] = Field(lambda x, t: t - 1j * shift * _square(x))
    fields['s*'] = Field(lambda x, t: t + 1j * shift * _square(x))

    return fields


def sample_points(count, params, seed, extent=3.0):
    """
    This function draws seeded random events with |xi_i| <= extent and one period of omega t.

    :param count: number of events
    :param params: OscillatorParams
    :param seed: random seed
    :param extent: half width in xi units
    :return: positions of shape (count, 3), times of shape (count,)
    """

    generator = np.random.default_rng(seed)
    scale = 1.0 / params.kappa if params.omega > 0 else 1.0
    period = 2.0 * np.pi / params.omega if params.omega > 0 else 2.0 * np.pi

    x = generator.uniform(-extent, extent, size=(count, 3)) * scale
    t = generator.uniform(0.0, period, size=count)

    return x, t


@qhoconf_debug
def coordinate_independence_check(params, energy, x, t, tolerance=None):
    """
    This function evaluates dz_nu/ds, ds/dz_mu, dz_nu*/ds* and ds*/dz_mu* by composing the chain rule
    operators on the coordinate functions expressed in (x, t).

    :param params: OscillatorParams
    :param energy: Energy or float
    :param x: positions of shape (N, 3)
    :param t: times of shape (N,)
    :param tolerance: pass threshold
    :return: CheckReport
    """

    if tolerance is None:
        tolerance = settings.TOLERANCES['independence']

    energy = float(energy)
    fields = coordinate_fields(energy, params)

    derivatives = OrderedDict()
    for axis in (1, 2, 3):
        derivatives['dz%i/ds' % axis] = apply_derivative(
            DerivativeOperator(D_DS, params), fields['z%i' % axis], x, t)
        derivatives['ds/dz%i' % axis] = apply_derivative(
            DerivativeOperator(D_DZ, params, energy, axis, FORM_CHAIN), fields['s'], x, t)
        derivatives['dz%i*/ds*' % axis] = apply_derivative(
            DerivativeOperator(D_DS_STAR, params), fields['z%i*' % axis], x, t)
        derivatives['ds*/dz%i*' % axis] = apply_derivative(
            DerivativeOperator(D_DZ_STAR, params, energy, axis, FORM_CHAIN), fields['s*'], x, t)

    maxima = OrderedDict((name, float(np.max(np.abs(value)))) for name, value in derivatives.items())
    measured = max(maxima.values())

    coordinate_independence_check._debug('independence maxima %r', maxima)

    return CheckReport(
        'independence', 'Eq. (5 block)', measured, tolerance,
        OrderedDict([('points', int(np.shape(x)[0])), ('energy', energy), ('maxima', maxima)]),
    )


def _cr_derivatives(tau, t, y, step):
    """
    This function returns g_t, g_y, h_t, h_y of tau(t + iy) by central differences.

    :param tau: vectorized complex function of s
    :param t: time grid
    :param y: imaginary time grid
    :param step: step in t and y
    :return: g_t, g_y, h_t, h_y
    """

    spec = StencilSpec(step, 0, 1)

    d_t = differentiate(lambda time: tau(time + 1j * y), t, spec).value
    d_y = differentiate(lambda imag: tau(t + 1j * imag), y, spec).value

    return np.real(d_t), np.real(d_y), np.imag(d_t), np.imag(d_y)


def _cr_residuals(tau, t, y, step):
    """
    This function returns the pointwise standard and printed-orientation residuals.

    :param tau: vectorized complex function of s
    :param t: time grid
    :param y: imaginary time grid
    :param step: step
    :return: standard residuals, printed residuals
    """

    g_t, g_y, h_t, h_y = _cr_derivatives(tau, t, y, step)

    standard = np.hypot(g_t - h_y, g_y + h_t)
    printed = np.hypot(g_y - h_t, h_y + g_t)

    return standard, printed


@qhoconf_debug
def cr_residual(tau, energy, params, t_values, u_values, step=1e-2, tolerance=None, name='cr-tau'):
    """
    This function evaluates the Cauchy-Riemann residuals of tau on a grid over (t, u), u = x^2, in the
    variables (t, y) with y = -(m omega / 2E) u, and the second order form
    tau_tt + (4E^2 / m^2 omega^2) tau_uu.

    :param tau: vectorized complex function of s
    :param energy: Energy or float
    :param params: OscillatorParams
    :param t_values: 1D time grid
    :param u_values: 1D grid of u = x^2 >= 0
    :param step: central difference step in t and y
    :param tolerance: pass threshold of the standard residual
    :param name: report name
    :return: CheckReport
    """

    if tolerance is None:
        tolerance = settings.TOLERANCES['cr_holomorphic']

    energy = _energy_value(energy)
    shift = imaginary_shift(energy, params)

    t, u = np.meshgrid(np.asarray(t_values, dtype=float), np.asarray(u_values, dtype=float), indexing='ij')
    y = -shift * u

    standard, printed = _cr_residuals(tau, t, y, step)
    standard_fine, _ = _cr_residuals(tau, t, y, step / 2.0)

    # second order form in (t, u): the u step maps onto the y step; undefined at omega = 0
    laplace = np.full(t.shape, np.nan)
    if shift > 0:
        spec = StencilSpec(step, 0, 2)
        tau_tt = differentiate(lambda time: tau(time - 1j * shift * u), t, spec).value
        tau_uu = differentiate(
            lambda square: tau(t - 1j * shift * square), u, StencilSpec(step / shift, 0, 2)).value
        laplace = np.abs(tau_tt + (4.0 * energy ** 2 / (params.mass * params.omega) ** 2) * tau_uu)

    measured = float(np.max(standard_fine))
    order = convergence_order(np.max(standard), np.max(standard_fine))

    details = OrderedDict([
        ('grid', [int(t.shape[0]), int(t.shape[1])]),
        ('step', step),
        ('standard_residual', float(np.max(standard))),
        ('standard_residual_half_step', measured),
        ('standard_residual_min', float(np.min(standard_fine))),
        ('convergence_order', order),
        ('printed_residual', float(np.max(printed))),
        ('printed_residual_min', float(np.min(printed))),
        ('second_order_residual', float(np.max(laplace))),
        ('holomorphic', bool(measured <= tolerance)),
    ])

    cr_residual._debug('cauchy-riemann residuals %r', details)

    return CheckReport(name, 'Eqs. (9)-(10)', measured, tolerance, details)


def map_energy(state, params):
    """
    This function returns the energy that parametrizes the map of a state; the free-field limit uses
    the reference energy since the map is undefined at E = 0.

    :param state: StateLabel
    :param params: OscillatorParams
    :return: float
    """

    if params.bound:
        return float(energy_of(state, params))

    return settings.FREE_FIELD_ENERGY


def _relative(difference, reference):
    """
    This function returns max |difference| / max |reference|.

    :param difference: array
    :param reference: array
    :return: float
    """

    return float(np.max(np.abs(difference)) / np.max(np.abs(reference)))


@qhoconf_debug
def operator_identity_check(params, seed=settings.SEED, count=20, points=100, energy=None, tolerance=None):
    """
    This function compares -(hbar^2 / 2m) sum_i d/dz_i* d/dz_i u + (3/2) hbar omega u with
    -(hbar^2 / 2m) laplacian u + (1/2) m omega^2 x^2 u on seeded gaussian damped random polynomials
    u(x) exp(-i E t / hbar).

    :param params: OscillatorParams
    :param seed: random seed
    :param count: number of test functions
    :param points: number of sample points
    :param energy: energy of the time factor
    :param tolerance: pass threshold of the relative deviation
    :return: CheckReport
    """

    if tolerance is None:
        tolerance = settings.TOLERANCES['operator_identity']

    if energy is None:
        energy = map_energy(StateLabel(), params)

    generator = np.random.default_rng(seed)
    width = 1.0 / params.kappa if params.bound else 1.0
    x, t = sample_points(points, params, seed + 1)
    spec = default_laplacian_spec(params)

    worst = 0.0
    z_path_calls = 0
    sample = None

    for _ in range(count):
        coefficients = generator.normal(size=(4, 4, 4))

        def test_function(y, time, coefficients=coefficients):
            q = np.asarray(y, dtype=float) / width
            damping = np.exp(-0.5 * np.sum(q ** 2, axis=-1))
            return polyval3d(q[..., 0], q[..., 1], q[..., 2], coefficients) * damping * \
                time_phase(energy, time, params)

        before = potential_energy.calls
        lhs = hamiltonian_conformal(test_function, x, t, params)
        z_path_calls += potential_energy.calls - before

        laplacian = laplacian_fd(test_function, x, t, spec)
        rhs = -params.hbar ** 2 / (2.0 * params.mass) * laplacian + \
            potential_energy(x, params) * test_function(x, t)

        worst = max(worst, _relative(lhs - rhs, rhs))
        if sample is None:
            sample = (complex(lhs[0]), complex(rhs[0]))

    operator_identity_check._debug('operator identity worst deviation %r', worst)

    return CheckReport('eq17', 'Eqs. (16)-(17), operator relationship', worst, tolerance, OrderedDict([
        ('functions', count),
        ('points', points),
        ('seed', seed),
        ('energy', energy),
        ('sample_z_form', sample[0]),
        ('sample_real_form', sample[1]),
        ('z_path_potential_evaluations', z_path_calls),
    ]))


@qhoconf_debug
def concise_schrodinger_check(state, params, norm_mode=UNIT_NORM, x=None, t=0.0, tolerance=None):
    """
    This function evaluates -(hbar^2 / 2m) sum_i d/dz_i* d/dz_i psi + (3/2) hbar omega psi - E psi
    through composed complex coordinate derivatives only. Any evaluation of the potential on this path
    fails the check.

    :param state: StateLabel
    :param params: OscillatorParams
    :param norm_mode: normalization mode
    :param x: positions of shape (N, 3), defaults to the residual grid
    :param t: time
    :param tolerance: pass threshold of the relative deviation
    :return: CheckReport
    """

    name = 'eq18 %s' % (state,)
    anchor = 'Eq. (18)'

    if not params.bound:
        return CheckReport.skip(name, anchor, 'requires omega > 0')

    if tolerance is None:
        tolerance = settings.TOLERANCES['concise_schrodinger']

    if x is None:
        x = cube_grid(turning_extent(state), settings.RESIDUAL_GRID_POINTS, params)

    field = eigen_field(state, params, norm_mode)
    expected = float(energy_of(state, params)) * field(x, t)

    before = potential_energy.calls
    lhs = hamiltonian_conformal(field, x, t, params)
    calls = potential_energy.calls - before

    measured = _relative(lhs - expected, expected)
    if calls:
        measured = float('inf')

    return CheckReport(name, anchor, measured, tolerance, OrderedDict([
        ('state', str(state)),
        ('points', int(np.shape(x)[0])),
        ('potential_evaluations', calls),
    ]))


@qhoconf_debug
def energy_derivative_check(state, params, norm_mode=UNIT_NORM, x=None, t=0.3, tolerance=None):
    """
    This function compares i hbar dpsi/ds and i hbar dpsi/ds* (d/ds = d/ds* = d/dt, central
    differences) with E psi.

    :param state: StateLabel
    :param params: OscillatorParams
    :param norm_mode: normalization mode
    :param x: positions of shape (N, 3), defaults to the coarse check grid
    :param t: time
    :param tolerance: pass threshold of the relative deviation
    :return: CheckReport
    """

    name = 'eq19 %s' % (state,)
    anchor = 'Eq. (19)'

    if not params.bound:
        return CheckReport.skip(name, anchor, 'requires omega > 0')

    if tolerance is None:
        tolerance = settings.TOLERANCES['energy_derivative']

    if x is None:
        x = cube_grid(turning_extent(state), settings.CHECK_GRID_POINTS, params)

    sampled = Field(lambda y, time: psi_real(state, y, time, params, norm_mode))
    expected = float(energy_of(state, params)) * sampled(x, t)

    deviations = OrderedDict()
    for kind in (D_DS, D_DS_STAR):
        value = 1j * params.hbar * apply_derivative(DerivativeOperator(kind, params), sampled, x, t)
        deviations[kind] = _relative(value - expected, expected)

    field = eigen_field(state, params, norm_mode)
    exact = 1j * params.hbar * apply_derivative(DerivativeOperator(D_DS, params), field, x, t)

    return CheckReport(name, anchor, max(deviations.values()), tolerance, OrderedDict([
        ('state', str(state)),
        ('deviations', deviations),
        ('exact_derivative_deviation', _relative(exact - expected, expected)),
    ]))


@qhoconf_debug
def free_field_reduction_check(params, energy=settings.FREE_FIELD_ENERGY, seed=settings.SEED, count=50,
                               tolerance=None):
    """
    This function sets omega = 0, where the map reduces to z = x and s = t, and checks that the concise
    operator acts on plane waves exp(i k.x - i E t / hbar), E = hbar^2 k^2 / 2m, like the free-field
    Schrodinger operator.

    :param params: OscillatorParams, omega is replaced by 0
    :param energy: plane wave energy
    :param seed: random seed
    :param count: number of sample points
    :param tolerance: pass threshold of the relative deviation
    :return: CheckReport
    """

    if tolerance is None:
        tolerance = settings.TOLERANCES['free_field']

    free = OscillatorParams(params.hbar, params.mass, 0.0)
    generator = np.random.default_rng(seed)

    direction = generator.normal(size=3)
    wave_vector = direction / np.linalg.norm(direction) * np.sqrt(2.0 * free.mass * energy) / free.hbar

    def plane_wave(y, time):
        phase = np.asarray(y, dtype=float) @ wave_vector - energy * np.asarray(time) / free.hbar
        return np.exp(1j * phase)

    x, t = sample_points(count, free, seed + 1)
    z, s = forward_map(x, t, energy, free)

    # the map must be the identity exactly
    map_deviation = float(max(
        np.max(np.abs(z - x)), np.max(np.abs(np.real(s) - t)), np.max(np.abs(np.imag(s))),
    ))

    value = plane_wave(x, t)
    expected = energy * value

    concise = hamiltonian_conformal(plane_wave, x, t, free)
    laplacian = laplacian_fd(plane_wave, x, t, default_laplacian_spec(free))
    free_operator = -free.hbar ** 2 / (2.0 * free.mass) * laplacian
    time_side = 1j * free.hbar * apply_derivative(DerivativeOperator(D_DS, free), plane_wave, x, t)

    deviations = OrderedDict([
        ('concise_vs_energy', _relative(concise - expected, expected)),
        ('concise_vs_free_operator', _relative(concise - free_operator, expected)),
        ('time_derivative_vs_energy', _relative(time_side - expected, expected)),
    ])

    measured = max(deviations.values())
    if map_deviation:
        measured = float('inf')

    return CheckReport('free-field', 'Eqs. (1), (18) at omega = 0', measured, tolerance, OrderedDict([
        ('energy', energy),
        ('wave_vector', wave_vector),
        ('points', count),
        ('map_deviation', map_deviation),
        ('deviations', deviations),
    ]))


@qhoconf_debug
def time_replacement_check(state, params, norm_mode=UNIT_NORM, x=None, t=0.7):
    """
    This function replaces t by t - i (m omega / 2E) x^2 in the gaussian free form theta(x) exp(-i E t /
    hbar) and checks that the result regenerates psi(x, t) and solves the Schrodinger equation.

    :param state: StateLabel
    :param params: OscillatorParams
    :param norm_mode: normalization mode
    :param x: positions of shape (N, 3), defaults to the coarse check grid
    :param t: time
    :return: agreement CheckReport, residual CheckReport
    """

    names = ('replacement %s' % (state,), 'replacement eq11 %s' % (state,))
    anchors = ('Eqs. (20)-(21)', 'Eq. (11)')

    if not params.bound:
        return tuple(
            CheckReport.skip(name, anchor, 'requires omega > 0') for name, anchor in zip(names, anchors)
        )

    if x is None:
        x = cube_grid(turning_extent(state), settings.CHECK_GRID_POINTS, params)

    energy = float(energy_of(state, params))

    def replaced(y, time):
        z, s = forward_map(y, time, energy, params)
        return psi_conformal(state, z, s, params, norm_mode)

    value = replaced(x, t)
    reference = psi_real(state, x, t, params, norm_mode)

    laplacian = laplacian_fd(replaced, x, t, default_laplacian_spec(params))
    kinetic = -params.hbar ** 2 / (2.0 * params.mass) * laplacian
    residual = kinetic + (potential_energy(x, params) - energy) * value

    agreement = CheckReport(names[0], anchors[0], _relative(value - reference, reference),
                            settings.TOLERANCES['psi_conformal'], OrderedDict([
                                ('state', str(state)), ('points', int(np.shape(x)[0])),
                            ]))

    solution = CheckReport(names[1], anchors[1], _relative(residual, energy * value),
                           settings.TOLERANCES['schrodinger_finite_difference'], OrderedDict([
                               ('state', str(state)), ('path', 'finite_difference'),
                           ]))

    return agreement, solution
