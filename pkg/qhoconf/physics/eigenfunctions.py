# pylint: disable=invalid-name, too-many-arguments

"""
Eigenfunctions Module
---------------------

This module constructs the oscillator eigenfunctions in real coordinates (phi, psi) and in conformal
coordinates (theta, tau).

The paper_norm constant (2 m omega / hbar)^(1/4) and the unit_norm constant (m omega / (pi hbar))^(1/4)
differ by the constant factor (2 pi)^(1/4). Both are selectable.
"""

from collections import OrderedDict
from dataclasses import dataclass
import math

import numpy as np

from qhoconf import settings
from qhoconf.debugging import ModuleLogger, qhoconf_debug
from qhoconf.define import UNIT_NORM, PAPER_NORM, NORM_MODES
from qhoconf.numerics import gauss_hermite, StencilSpec, differentiate
from qhoconf.physics.hermite import check_degree, hermite_eval, hermite_derivative
from qhoconf.physics.states import OscillatorParams, StateLabel, energy_of, xi_coordinate, \
    potential_energy
from qhoconf.verification.report import CheckReport


# enabling logging
ModuleLogger()


def _check_norm_mode(norm_mode):
    """
    This function validates a normalization mode.

    :param norm_mode: normalization mode
    :return: normalization mode
    """

    if norm_mode not in NORM_MODES:
        raise ValueError('norm mode must be one of %s, got %r' % (', '.join(NORM_MODES), norm_mode))

    return norm_mode


def k_l(l, params, norm_mode=UNIT_NORM):
    """
    This function returns the normalization constant of phi_l.

    :param l: quantum number
    :param params: OscillatorParams
    :param norm_mode: 'unit_norm' or 'paper_norm'
    :return: normalization constant
    """

    l = check_degree(l)
    _check_norm_mode(norm_mode)

    ratio = params.mass * params.omega / params.hbar

    if norm_mode == PAPER_NORM:
        prefactor = (2.0 * ratio) ** 0.25
    else:
        prefactor = (ratio / math.pi) ** 0.25

    return prefactor / math.sqrt(2 ** l * math.factorial(l))


def phi(l, x, params, norm_mode=UNIT_NORM):
    """
    This function returns phi_l(x) = k_l H_l(xi) exp(-xi^2 / 2).

    :param l: quantum number
    :param x: length, scalar or array
    :param params: OscillatorParams
    :param norm_mode: normalization mode
    :return: phi_l(x)
    """

    xi = xi_coordinate(x, params)

    return k_l(l, params, norm_mode) * hermite_eval(l, xi) * np.exp(-0.5 * xi ** 2)


def phi_derivative(l, x, params, norm_mode=UNIT_NORM, order=1):
    """
    This function returns the first or second x derivative of phi_l from the hermite derivative rule.

    :param l: quantum number
    :param x: length
    :param params: OscillatorParams
    :param norm_mode: normalization mode
    :param order: 1 or 2
    :return: derivative value
    """

    xi = xi_coordinate(x, params)
    kappa = params.kappa
    gauss = k_l(l, params, norm_mode) * np.exp(-0.5 * xi ** 2)
    value = hermite_eval(l, xi)
    slope = hermite_derivative(l, xi)

    if order == 1:
        return kappa * gauss * (slope - xi * value)

    if order == 2:
        curvature = 2.0 * l * hermite_derivative(l - 1, xi) if l > 0 else 0.0 * xi
        return kappa ** 2 * gauss * (curvature - 2.0 * xi * slope + (xi ** 2 - 1.0) * value)

    raise ValueError('derivative order must be 1 or 2, got %r' % (order,))


def theta(l, z, params, norm_mode=UNIT_NORM):
    """
    This function returns the gaussian-free polynomial part theta_l(z) = k_l H_l(zeta).

    :param l: quantum number
    :param z: conformal spatial coordinate
    :param params: OscillatorParams
    :param norm_mode: normalization mode
    :return: theta_l(z)
    """

    return k_l(l, params, norm_mode) * hermite_eval(l, xi_coordinate(z, params))


def time_phase(energy, t, params):
    """
    This function returns exp(-i E t / hbar), t real or complex.

    :param energy: Energy or float
    :param t: time
    :param params: OscillatorParams
    :return: phase factor
    """

    return np.exp(-1j * float(energy) * np.asarray(t) / params.hbar)


def _components(x):
    """
    This function splits positions of shape (..., 3) into three coordinate arrays.

    :param x: positions
    :return: tuple of three coordinate arrays
    """

    x = np.asarray(x, dtype=float)
    if x.shape[-1] != 3:
        raise ValueError('positions must have a trailing axis of length 3, got shape %r' % (x.shape,))

    return x[..., 0], x[..., 1], x[..., 2]


def psi_real(state, x, t, params, norm_mode=UNIT_NORM):
    """
    This function returns psi(x, t) = phi_l1(x1) phi_l2(x2) phi_l3(x3) exp(-i E t / hbar).

    :param state: StateLabel
    :param x: position 3-vector or array of shape (..., 3)
    :param t: time
    :param params: OscillatorParams
    :param norm_mode: normalization mode
    :return: complex value
    """

    spatial = 1.0
    for l, coordinate in zip(state, _components(x)):
        spatial = spatial * phi(l, coordinate, params, norm_mode)

    return spatial * time_phase(energy_of(state, params), t, params)


def psi_conformal(state, z, s, params, norm_mode=UNIT_NORM):
    """
    This function returns psi(z, s) = theta_l1(z1) theta_l2(z2) theta_l3(z3) exp(-i E s / hbar).

    :param state: StateLabel
    :param z: conformal 3-vector or array of shape (..., 3)
    :param s: complex time
    :param params: OscillatorParams
    :param norm_mode: normalization mode
    :return: complex value
    """

    polynomial = 1.0
    for l, coordinate in zip(state, _components(z)):
        polynomial = polynomial * theta(l, coordinate, params, norm_mode)

    return polynomial * time_phase(energy_of(state, params), s, params)


def psi_laplacian(state, x, t, params, norm_mode=UNIT_NORM):
    """
    This function returns the analytic laplacian of psi.

    :param state: StateLabel
    :param x: positions
    :param t: time
    :param params: OscillatorParams
    :param norm_mode: normalization mode
    :return: complex value
    """

    coordinates = _components(x)
    values = [phi(l, c, params, norm_mode) for l, c in zip(state, coordinates)]
    curvatures = [phi_derivative(l, c, params, norm_mode, order=2) for l, c in zip(state, coordinates)]

    total = (
        curvatures[0] * values[1] * values[2]
        + values[0] * curvatures[1] * values[2]
        + values[0] * values[1] * curvatures[2]
    )

    return total * time_phase(energy_of(state, params), t, params)


def laplacian_fd(func, x, t, spec):
    """
    This function returns the laplacian of a function of (x, t) by central differences with Richardson
    extrapolation.

    :param func: vectorized callable (x, t)
    :param x: positions of shape (..., 3)
    :param t: time
    :param spec: StencilSpec of the second derivative, step in length units
    :return: complex value
    """

    x = np.asarray(x, dtype=float)
    total = 0.0

    for axis in range(3):
        def along(coordinate, axis=axis):
            shifted = x.copy()
            shifted[..., axis] = coordinate
            return func(shifted, t)

        total = total + differentiate(along, x[..., axis], spec).value

    return total


def default_laplacian_spec(params):
    """
    This function returns the second derivative stencil with the step scaled to the oscillator length.

    :param params: OscillatorParams
    :return: StencilSpec
    """

    scale = params.kappa if params.bound else 1.0

    return StencilSpec(settings.STEP / scale, settings.RICHARDSON_LEVELS, 2)


def psi_laplacian_fd(state, x, t, params, norm_mode=UNIT_NORM, spec=None):
    """
    This function returns the laplacian of psi by central differences with Richardson extrapolation.

    :param state: StateLabel
    :param x: positions of shape (..., 3)
    :param t: time
    :param params: OscillatorParams
    :param norm_mode: normalization mode
    :param spec: StencilSpec of the second derivative, step in length units
    :return: complex value
    """

    if spec is None:
        spec = default_laplacian_spec(params)

    return laplacian_fd(lambda y, time: psi_real(state, y, time, params, norm_mode), x, t, spec)


def hamiltonian_real(state, x, t, params, norm_mode=UNIT_NORM, path='analytic'):
    """
    This function applies -(hbar^2 / 2m) laplacian + m omega^2 x^2 / 2 to psi.

    :param state: StateLabel
    :param x: positions of shape (..., 3)
    :param t: time
    :param params: OscillatorParams
    :param norm_mode: normalization mode
    :param path: 'analytic' or 'finite_difference'
    :return: complex value
    """

    if path == 'analytic':
        laplacian = psi_laplacian(state, x, t, params, norm_mode)
    elif path == 'finite_difference':
        laplacian = psi_laplacian_fd(state, x, t, params, norm_mode)
    else:
        raise ValueError('unknown laplacian path %r' % (path,))

    value = psi_real(state, x, t, params, norm_mode)

    return -params.hbar ** 2 / (2.0 * params.mass) * laplacian + potential_energy(x, params) * value


def turning_extent(state):
    """
    This function returns the grid half width 3 + sqrt(2n + 1) in xi units.

    :param state: StateLabel
    :return: half width
    """

    return 3.0 + math.sqrt(2 * state.n + 1)


def cube_grid(extent, points, params):
    """
    This function returns the points of a cubic grid |xi_i| <= extent as an array of shape (N, 3) in
    length units.

    :param extent: half width in xi units
    :param points: points per axis
    :param params: OscillatorParams
    :return: positions
    """

    axis = np.linspace(-extent, extent, points) / params.kappa
    mesh = np.meshgrid(axis, axis, axis, indexing='ij')

    return np.stack([m.ravel() for m in mesh], axis=-1)


@dataclass(frozen=True)
class Eigenfunction1D(object):
    """
    This class describes phi_l for one set of parameters and one normalization.
    """

    l: int
    params: OscillatorParams
    norm_mode: str = UNIT_NORM

    def __post_init__(self):
        check_degree(self.l)
        _check_norm_mode(self.norm_mode)

    def __call__(self, x):
        return phi(self.l, x, self.params, self.norm_mode)

    def norm(self, order=settings.QUAD_ORDER):
        """
        This function integrates |phi_l|^2 over the real line by gauss-hermite quadrature.

        :param order: quadrature order
        :return: squared L2 norm
        """

        rule = gauss_hermite(max(order, self.l + 1))
        constant = k_l(self.l, self.params, self.norm_mode)

        return constant ** 2 / self.params.kappa * rule.integrate(lambda xi: hermite_eval(self.l, xi) ** 2)

    def node_count(self, points=4001):
        """
        This function counts the sign changes of phi_l on a fine grid covering the turning points.

        :param points: grid points
        :return: number of real zeros found
        """

        extent = 3.0 + math.sqrt(2 * self.l + 1)
        signs = np.sign(self(np.linspace(-extent, extent, points) / self.params.kappa))
        signs = signs[signs != 0]

        return int(np.count_nonzero(signs[1:] != signs[:-1]))


@dataclass(frozen=True)
class Eigenfunction3D(object):
    """
    This class describes psi(x, t) of one state.
    """

    state: StateLabel
    params: OscillatorParams
    norm_mode: str = UNIT_NORM

    def __post_init__(self):
        _check_norm_mode(self.norm_mode)

    def __call__(self, x, t):
        return psi_real(self.state, x, t, self.params, self.norm_mode)

    @property
    def energy(self):
        """
        This function returns the energy of the state.

        :return: Energy
        """

        return energy_of(self.state, self.params)

    def factors(self):
        """
        This function returns the three one dimensional factors.

        :return: tuple of Eigenfunction1D
        """

        return tuple(Eigenfunction1D(l, self.params, self.norm_mode) for l in self.state)


@dataclass(frozen=True)
class ConformalEigenfunction(object):
    """
    This class describes psi(z, s) = theta(z) tau(s) of one state.
    """

    state: StateLabel
    params: OscillatorParams
    norm_mode: str = UNIT_NORM

    def __post_init__(self):
        _check_norm_mode(self.norm_mode)

    def __call__(self, z, s):
        return psi_conformal(self.state, z, s, self.params, self.norm_mode)

    def theta(self, z):
        """
        This function returns the polynomial part theta_l1 theta_l2 theta_l3.

        :param z: conformal 3-vector or array of shape (..., 3)
        :return: real value
        """

        polynomial = 1.0
        for l, coordinate in zip(self.state, _components(z)):
            polynomial = polynomial * theta(l, coordinate, self.params, self.norm_mode)

        return polynomial

    def tau(self, s):
        """
        This function returns the complex time factor exp(-i E s / hbar).

        :param s: complex time
        :return: complex value
        """

        return time_phase(energy_of(self.state, self.params), s, self.params)


def psi_gradient(state, x, t, params, axis, norm_mode=UNIT_NORM):
    """
    This function returns the analytic derivative of psi along one axis.

    :param state: StateLabel
    :param x: positions of shape (..., 3)
    :param t: time
    :param params: OscillatorParams
    :param axis: 1..3
    :param norm_mode: normalization mode
    :return: complex value
    """

    total = 1.0
    for index, (l, coordinate) in enumerate(zip(state, _components(x))):
        if index == axis - 1:
            total = total * phi_derivative(l, coordinate, params, norm_mode)
        else:
            total = total * phi(l, coordinate, params, norm_mode)

    return total * time_phase(energy_of(state, params), t, params)


def psi_time_derivative(state, x, t, params, norm_mode=UNIT_NORM):
    """
    This function returns the analytic time derivative -i (E / hbar) psi.

    :param state: StateLabel
    :param x: positions
    :param t: time
    :param params: OscillatorParams
    :param norm_mode: normalization mode
    :return: complex value
    """

    energy = float(energy_of(state, params))

    return -1j * energy / params.hbar * psi_real(state, x, t, params, norm_mode)


def _requires_bound(name, anchor, params):
    """
    This function returns a skipped report in the free-field limit, where no eigenfunction exists.

    :param name: check name
    :param anchor: equation reference
    :param params: OscillatorParams
    :return: CheckReport or None
    """

    if params.bound:
        return None

    return CheckReport.skip(name, anchor, 'requires omega > 0')


@qhoconf_debug
def schrodinger_residual(state, params, norm_mode=UNIT_NORM, path='analytic', x=None, t=0.0, tolerance=None):
    """
    This function evaluates -(hbar^2 / 2m) laplacian psi + (1/2) m omega^2 x^2 psi - E psi over the
    residual grid, relative to max |E psi|.

    :param state: StateLabel
    :param params: OscillatorParams
    :param norm_mode: normalization mode
    :param path: 'analytic' or 'finite_difference'
    :param x: positions of shape (N, 3), defaults to the residual grid over the turning points
    :param t: time
    :param tolerance: pass threshold
    :return: CheckReport
    """

    name = 'eq11 %s %s' % (path, state)
    anchor = 'Eq. (11)'

    skipped = _requires_bound(name, anchor, params)
    if skipped is not None:
        return skipped

    if tolerance is None:
        tolerance = settings.TOLERANCES['schrodinger_%s' % path]

    if x is None:
        x = cube_grid(turning_extent(state), settings.RESIDUAL_GRID_POINTS, params)

    energy = float(energy_of(state, params))
    expected = energy * psi_real(state, x, t, params, norm_mode)
    residual = hamiltonian_real(state, x, t, params, norm_mode, path) - expected

    measured = float(np.max(np.abs(residual)) / np.max(np.abs(expected)))

    schrodinger_residual._debug('%s: %r', name, measured)

    return CheckReport(name, anchor, measured, tolerance, OrderedDict([
        ('state', str(state)),
        ('path', path),
        ('energy', energy),
        ('points', int(np.shape(x)[0])),
        ('extent_xi', turning_extent(state)),
    ]))


@qhoconf_debug
def time_derivative_check(state, params, norm_mode=UNIT_NORM, x=None, t=0.3, tolerance=None):
    """
    This function compares i hbar dpsi/dt by central differences in t with E psi.

    :param state: StateLabel
    :param params: OscillatorParams
    :param norm_mode: normalization mode
    :param x: positions of shape (N, 3), defaults to the coarse check grid
    :param t: time
    :param tolerance: pass threshold
    :return: CheckReport
    """

    name = 'eq12 %s' % (state,)
    anchor = 'Eq. (12)'

    skipped = _requires_bound(name, anchor, params)
    if skipped is not None:
        return skipped

    if tolerance is None:
        tolerance = settings.TOLERANCES['time_derivative']

    if x is None:
        x = cube_grid(turning_extent(state), settings.CHECK_GRID_POINTS, params)

    energy = float(energy_of(state, params))
    expected = energy * psi_real(state, x, t, params, norm_mode)

    spec = StencilSpec(settings.STEP / params.omega, settings.RICHARDSON_LEVELS, 1)
    estimate = differentiate(lambda time: psi_real(state, x, time, params, norm_mode), t, spec)
    lhs = 1j * params.hbar * estimate.value

    closed = 1j * params.hbar * psi_time_derivative(state, x, t, params, norm_mode)

    scale = np.max(np.abs(expected))
    measured = float(np.max(np.abs(lhs - expected)) / scale)

    return CheckReport(name, anchor, measured, tolerance, OrderedDict([
        ('state', str(state)),
        ('energy', energy),
        ('points', int(np.shape(x)[0])),
        ('closed_form_deviation', float(np.max(np.abs(closed - expected)) / scale)),
        ('stencil_error_estimate', float(np.max(estimate.error)) * params.hbar / scale),
    ]))


@qhoconf_debug
def orthonormality_check(params, l_max=10, norm_mode=UNIT_NORM, order=settings.QUAD_ORDER, tolerance=None):
    """
    This function computes the gram matrix <phi_l, phi_m> for l, m <= l_max by gauss-hermite quadrature
    and compares it with the identity (times sqrt(2 pi) in paper_norm mode).

    :param params: OscillatorParams
    :param l_max: largest quantum number
    :param norm_mode: normalization mode
    :param order: quadrature order
    :param tolerance: pass threshold
    :return: CheckReport
    """

    name = 'orthonormality'
    anchor = 'Eq. (14)'

    skipped = _requires_bound(name, anchor, params)
    if skipped is not None:
        return skipped

    if tolerance is None:
        tolerance = settings.TOLERANCES['orthonormality']

    rule = gauss_hermite(max(order, l_max + 1))
    values = np.array([k_l(l, params, norm_mode) * hermite_eval(l, rule.nodes) for l in range(l_max + 1)])
    gram = (values * rule.weights) @ values.T / params.kappa

    diagonal = 1.0 if norm_mode == UNIT_NORM else math.sqrt(2.0 * math.pi)
    measured = float(np.max(np.abs(gram - diagonal * np.eye(l_max + 1))))

    nodes = [Eigenfunction1D(l, params, norm_mode).node_count() for l in range(l_max + 1)]

    orthonormality_check._debug('gram matrix deviation %r', measured)

    return CheckReport(name, anchor, measured, tolerance, OrderedDict([
        ('l_max', l_max),
        ('norm_mode', norm_mode),
        ('quadrature_order', rule.order),
        ('expected_diagonal', diagonal),
        ('node_counts', nodes),
        ('node_counts_match', nodes == list(range(l_max + 1))),
    ]))


def hermite_orthogonality_check(l_max=12, order=settings.QUAD_ORDER, tolerance=None):
    """
    This function checks that int H_l H_m exp(-x^2) dx vanishes relative to the norms for l != m.

    :param l_max: largest degree
    :param order: quadrature order
    :param tolerance: pass threshold
    :return: CheckReport
    """

    if tolerance is None:
        tolerance = settings.TOLERANCES['hermite_orthogonality']

    rule = gauss_hermite(max(order, l_max + 1))
    values = np.array([hermite_eval(l, rule.nodes) for l in range(l_max + 1)])
    gram = (values * rule.weights) @ values.T

    norms = np.sqrt(np.outer(np.diag(gram), np.diag(gram)))
    off_diagonal = np.abs(gram / norms - np.eye(l_max + 1))

    measured = float(np.max(off_diagonal))

    return CheckReport('hermite-orthogonality', 'Eq. (14)', measured, tolerance, OrderedDict([
        ('l_max', l_max),
        ('quadrature_order', rule.order),
    ]))


@qhoconf_debug
def norm_discrepancy_check(params, l_max=10, points=None, tolerance=None):
    """
    This function reports the ratio of paper_norm and unit_norm phi_l, which is (2 pi)^(1/4) for
    every l and x.

    :param params: OscillatorParams
    :param l_max: largest quantum number
    :param points: sample positions, defaults to a grid avoiding the nodes
    :param tolerance: pass threshold of the relative deviation
    :return: CheckReport
    """

    name = 'norm'
    anchor = 'Eq. (14), k_l'

    skipped = _requires_bound(name, anchor, params)
    if skipped is not None:
        return skipped

    if tolerance is None:
        tolerance = settings.TOLERANCES['norm_ratio']

    if points is None:
        points = np.linspace(-3.0, 3.0, 13) / params.kappa + 0.0137 / params.kappa

    expected = (2.0 * math.pi) ** 0.25
    deviation = 0.0

    for l in range(l_max + 1):
        paper = phi(l, points, params, PAPER_NORM)
        unit = phi(l, points, params, UNIT_NORM)
        mask = np.abs(unit) > 1e-300
        deviation = max(deviation, float(np.max(np.abs(paper[mask] / unit[mask] / expected - 1.0))))

    paper_norm = Eigenfunction1D(0, params, PAPER_NORM).norm()

    return CheckReport(name, anchor, deviation, tolerance, OrderedDict([
        ('expected_ratio', expected),
        ('paper_norm_squared_l0', paper_norm),
        ('unit_norm_squared_l0', Eigenfunction1D(0, params, UNIT_NORM).norm()),
        ('l_max', l_max),
    ]))
