# pylint: disable=invalid-name, too-many-arguments, too-many-locals

"""
Ladder Module
-------------

This module contains the lowering and raising operators in real coordinates, in conformal coordinates
and as exact maps on state labels, together with the number operator, commutator, adjointness and
representation agreement checks.

In real coordinates a = (d/dxi + xi) / sqrt(2) and a+ = (-d/dxi + xi) / sqrt(2). Acting on P(xi)
exp(-xi^2 / 2) they reduce to P -> P' / sqrt(2) and P -> (2 xi P - P') / sqrt(2) on the polynomial
part, which is how SeparableState composes them without finite differences. Ladder operators act on
the spatial factor only; the time phase of the input state is kept.
"""

from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
import math

import numpy as np
from numpy.polynomial import Hermite

from qhoconf import settings
from qhoconf.debugging import ModuleLogger, qhoconf_debug
from qhoconf.define import LOWER, RAISE, DIRECTIONS, LADDER_REPS, UNIT_NORM
from qhoconf.numerics import gauss_hermite
from qhoconf.physics.conformal import forward_map, sample_points
from qhoconf.physics.eigenfunctions import k_l, phi, theta, time_phase, cube_grid, turning_extent, \
    _components
from qhoconf.physics.hermite import check_degree, hermite_eval, hermite_derivative
from qhoconf.physics.states import StateLabel, energy_of, xi_coordinate, states_up_to, _axis_index
from qhoconf.verification.report import CheckReport


# enabling logging
ModuleLogger()


SQRT2 = math.sqrt(2.0)


def _check_direction(direction):
    """
    This function validates a ladder direction.

    :param direction: 'lower' or 'raise'
    :return: direction
    """

    if direction not in DIRECTIONS:
        raise ValueError('direction must be %r or %r, got %r' % (LOWER, RAISE, direction))

    return direction


def _check_bound(params):
    """
    This function rejects the free-field limit where the ladder operators are undefined.

    :param params: OscillatorParams
    :return: None
    """

    if not params.bound:
        raise ValueError('ladder operators require omega > 0')


@dataclass(frozen=True)
class LadderRep(object):
    """
    This class names one ladder operator: representation, direction and axis.
    """

    rep: str
    direction: str
    axis: int

    def __post_init__(self):
        if self.rep not in LADDER_REPS:
            raise ValueError('unknown ladder representation %r' % (self.rep,))

        _check_direction(self.direction)
        _axis_index(self.axis)

    @property
    def adjoint(self):
        """
        This function returns the operator of the opposite direction.

        :return: LadderRep
        """

        return LadderRep(self.rep, RAISE if self.direction == LOWER else LOWER, self.axis)


@dataclass(frozen=True)
class LadderResult(object):
    """
    This class holds the outcome of a ladder operator on a state label. The coefficient is stored as
    its exact integer square; an annihilated state has no label and coefficient 0.
    """

    coefficient_squared: int
    state: StateLabel = None

    @property
    def coefficient(self):
        """
        This function returns the coefficient sqrt(coefficient_squared).

        :return: coefficient
        """

        return math.sqrt(self.coefficient_squared)

    @property
    def annihilated(self):
        """
        This function tells whether the vacuum was lowered.

        :return: bool
        """

        return self.state is None


def ladder_state(state, axis, direction):
    """
    This function applies a ladder operator to a state label exactly.

    :param state: StateLabel
    :param axis: 1..3
    :param direction: 'lower' or 'raise'
    :return: LadderResult
    """

    _check_direction(direction)
    l = state[axis]

    if direction == LOWER:
        if l == 0:
            return LadderResult(0, None)
        return LadderResult(l, state.replace(axis, l - 1))

    return LadderResult(l + 1, state.replace(axis, l + 1))


def ladder_eigenvalue(state):
    """
    This function returns sum_i (a_i+ a_i) + 3/2 on a state from ladder_state compositions.

    :param state: StateLabel
    :return: exact Fraction
    """

    total = Fraction(3, 2)
    for axis in (1, 2, 3):
        lowered = ladder_state(state, axis, LOWER)
        if lowered.annihilated:
            continue

        raised = ladder_state(lowered.state, axis, RAISE)
        total += math.isqrt(lowered.coefficient_squared * raised.coefficient_squared)

    return total


def lower_poly(poly):
    """
    This function lowers the polynomial part of P(xi) exp(-xi^2 / 2).

    :param poly: numpy Hermite series in xi
    :return: Hermite series
    """

    return poly.deriv() / SQRT2


def raise_poly(poly):
    """
    This function raises the polynomial part of P(xi) exp(-xi^2 / 2).

    :param poly: numpy Hermite series in xi
    :return: Hermite series
    """

    # H_1 = 2 xi
    return (Hermite([0.0, 1.0]) * poly - poly.deriv()) / SQRT2


def ladder_poly(poly, direction):
    """
    This function applies a ladder operator to a polynomial part.

    :param poly: numpy Hermite series in xi
    :param direction: 'lower' or 'raise'
    :return: Hermite series
    """

    if _check_direction(direction) == LOWER:
        return lower_poly(poly)

    return raise_poly(poly)


def eigen_poly(l, params, norm_mode=UNIT_NORM):
    """
    This function returns k_l H_l as a Hermite series.

    :param l: quantum number
    :param params: OscillatorParams
    :param norm_mode: normalization mode
    :return: Hermite series
    """

    coefficients = np.zeros(check_degree(l) + 1)
    coefficients[-1] = k_l(l, params, norm_mode)

    return Hermite(coefficients)


class SeparableState(object):
    """
    This class describes P1(xi1) P2(xi2) P3(xi3) exp(-xi^2 / 2) exp(-i E t / hbar), the closure of the
    eigenfunctions under ladder operators.
    """

    def __init__(self, factors, params, energy):
        """
        This function initializes the state.

        :param factors: three numpy Hermite series in xi
        :param params: OscillatorParams
        :param energy: energy of the time phase
        :return: None
        """

        if len(factors) != 3:
            raise ValueError('a separable state needs three factors, got %i' % len(factors))

        _check_bound(params)

        self.factors = tuple(factors)
        self.params = params
        self.energy = float(energy)

    @classmethod
    def from_label(cls, state, params, norm_mode=UNIT_NORM, amplitude=1.0):
        """
        This function builds the eigenfunction of a state label.

        :param state: StateLabel
        :param params: OscillatorParams
        :param norm_mode: normalization mode
        :param amplitude: constant factor
        :return: SeparableState
        """

        factors = [eigen_poly(l, params, norm_mode) for l in state]
        factors[0] = factors[0] * amplitude

        return cls(factors, params, energy_of(state, params))

    def apply(self, axis, direction):
        """
        This function applies a ladder operator along one axis.

        :param axis: 1..3
        :param direction: 'lower' or 'raise'
        :return: SeparableState
        """

        factors = list(self.factors)
        factors[_axis_index(axis)] = ladder_poly(factors[_axis_index(axis)], direction)

        return SeparableState(factors, self.params, self.energy)

    def polynomial(self, z):
        """
        This function evaluates the polynomial part at conformal positions.

        :param z: positions of shape (..., 3)
        :return: real value
        """

        total = 1.0
        for factor, coordinate in zip(self.factors, _components(z)):
            total = total * factor(xi_coordinate(coordinate, self.params))

        return total

    def __call__(self, x, t):
        xi_square = np.sum(xi_coordinate(np.asarray(x, dtype=float), self.params) ** 2, axis=-1)

        return self.polynomial(x) * np.exp(-0.5 * xi_square) * time_phase(self.energy, t, self.params)


def ladder_apply_real(state, axis, direction, x, t, params, norm_mode=UNIT_NORM):
    """
    This function evaluates (sqrt(hbar / 2 m omega) d/dx_axis +- sqrt(m omega / 2 hbar) x_axis) psi at
    (x, t) with the hermite derivative rule; '+' lowers and '-' raises.

    :param state: StateLabel or SeparableState
    :param axis: 1..3
    :param direction: 'lower' or 'raise'
    :param x: position 3-vector or array of shape (..., 3)
    :param t: time
    :param params: OscillatorParams
    :param norm_mode: normalization mode
    :return: complex value
    """

    _check_bound(params)

    if isinstance(state, SeparableState):
        return state.apply(axis, direction)(x, t)

    _check_direction(direction)
    l = state[axis]

    total = 1.0
    for index, (degree, coordinate) in enumerate(zip(state, _components(x))):
        if index != axis - 1:
            total = total * phi(degree, coordinate, params, norm_mode)
            continue

        xi = xi_coordinate(coordinate, params)
        slope = hermite_derivative(l, xi)
        if direction == LOWER:
            poly = slope / SQRT2
        else:
            poly = (2.0 * xi * hermite_eval(l, xi) - slope) / SQRT2

        total = total * k_l(l, params, norm_mode) * poly * np.exp(-0.5 * xi ** 2)

    return total * time_phase(energy_of(state, params), t, params)


def ladder_apply_conformal(state, axis, direction, z, params, s=0.0, norm_mode=UNIT_NORM):
    """
    This function applies a = 2^(-1/2) d/dzeta or a+ = -2^(-1/2) d/dzeta* to theta(z) tau(s).

    Both directions act on the polynomial part k_l H_l(zeta) of the target axis. Raising reduces to
    (2 zeta P - P') / sqrt(2) there, so no gaussian is evaluated and large |zeta| stays finite.

    :param state: StateLabel
    :param axis: 1..3
    :param direction: 'lower' or 'raise'
    :param z: conformal 3-vector or array of shape (..., 3), real
    :param params: OscillatorParams
    :param s: complex time
    :param norm_mode: normalization mode
    :return: complex value
    """

    _check_bound(params)
    _check_direction(direction)

    z = np.asarray(z, dtype=float)
    tau = time_phase(energy_of(state, params), s, params)

    total = 1.0
    for index, (degree, coordinate) in enumerate(zip(state, _components(z))):
        if index == axis - 1:
            poly = ladder_poly(eigen_poly(degree, params, norm_mode), direction)
            total = total * poly(xi_coordinate(coordinate, params))
        else:
            total = total * theta(degree, coordinate, params, norm_mode)

    return total * tau


@qhoconf_debug
def number_operator_check(state, params, x=None, t=0.0, norm_mode=UNIT_NORM, amplitude=1.0,
                          tolerance=None):
    """
    This function compares sum_i a_i+ a_i psi + (3/2) psi with (E / hbar omega) psi over a grid.

    :param state: StateLabel
    :param params: OscillatorParams
    :param x: positions of shape (N, 3), defaults to the coarse check grid
    :param t: time
    :param norm_mode: normalization mode
    :param amplitude: constant factor applied to psi
    :param tolerance: pass threshold of the relative deviation
    :return: CheckReport
    """

    name = 'number %s' % (state,)
    anchor = 'Eq. (24)'

    if not params.bound:
        return CheckReport.skip(name, anchor, 'requires omega > 0')

    if tolerance is None:
        tolerance = settings.TOLERANCES['number_operator']

    if x is None:
        x = cube_grid(turning_extent(state), settings.CHECK_GRID_POINTS, params)

    psi = SeparableState.from_label(state, params, norm_mode, amplitude)
    value = psi(x, t)

    lhs = 1.5 * value
    for axis in (1, 2, 3):
        lhs = lhs + psi.apply(axis, LOWER).apply(axis, RAISE)(x, t)

    expected = float(energy_of(state, params)) / (params.hbar * params.omega)
    rhs = expected * value

    measured = float(np.max(np.abs(lhs - rhs)) / np.max(np.abs(rhs)))
    eigenvalue = float(np.real(np.vdot(value, lhs) / np.vdot(value, value)))

    details = OrderedDict([
        ('state', str(state)),
        ('points', int(np.shape(x)[0])),
        ('amplitude', amplitude),
        ('eigenvalue', eigenvalue),
        ('expected', expected),
        ('ladder_state_eigenvalue', str(ladder_eigenvalue(state))),
    ])

    number_operator_check._debug('number operator %s: eigenvalue %r', state, eigenvalue)

    return CheckReport(name, anchor, measured, tolerance, details)


@qhoconf_debug
def commutator_check(params, n_max=3, x=None, t=0.0, norm_mode=UNIT_NORM, tolerance=None):
    """
    This function checks [a_i, a_j+] psi = delta_ij psi for every axis pair and every state with
    total degree at most n_max.

    :param params: OscillatorParams
    :param n_max: largest total degree
    :param x: positions of shape (N, 3), defaults to the coarse check grid
    :param t: time
    :param norm_mode: normalization mode
    :param tolerance: pass threshold of the relative deviation
    :return: CheckReport
    """

    name = 'commutator'
    anchor = 'Eqs. (22)-(23)'

    if not params.bound:
        return CheckReport.skip(name, anchor, 'requires omega > 0')

    if tolerance is None:
        tolerance = settings.TOLERANCES['commutator']

    if x is None:
        x = cube_grid(turning_extent(StateLabel(n_max, 0, 0)), settings.CHECK_GRID_POINTS, params)

    worst = 0.0
    worst_case = None
    states = states_up_to(n_max)

    for state in states:
        psi = SeparableState.from_label(state, params, norm_mode)
        value = psi(x, t)
        scale = np.max(np.abs(value))

        for i in (1, 2, 3):
            for j in (1, 2, 3):
                commutator = psi.apply(j, RAISE).apply(i, LOWER)(x, t) \
                    - psi.apply(i, LOWER).apply(j, RAISE)(x, t)
                expected = value if i == j else 0.0
                deviation = float(np.max(np.abs(commutator - expected)) / scale)

                if deviation > worst or worst_case is None:
                    worst, worst_case = deviation, '%s [a_%i, a_%i+]' % (state, i, j)

    commutator_check._debug('commutator worst case %s: %r', worst_case, worst)

    return CheckReport(name, anchor, worst, tolerance, OrderedDict([
        ('states', len(states)),
        ('points', int(np.shape(x)[0])),
        ('worst_case', worst_case),
    ]))


@qhoconf_debug
def rep_agreement_check(params, n_max=4, count=50, seed=settings.SEED, norm_mode=UNIT_NORM, tolerance=None):
    """
    This function compares ladder_apply_real at (x, t) with ladder_apply_conformal at the mapped point
    (z, s) for every state with total degree at most n_max, every axis and both directions.

    :param params: OscillatorParams
    :param n_max: largest total degree
    :param count: number of seeded sample points
    :param seed: random seed
    :param norm_mode: normalization mode
    :param tolerance: pass threshold of the relative deviation
    :return: CheckReport
    """

    name = 'ladder-reps'
    anchor = 'Eqs. (22)-(27)'

    if not params.bound:
        return CheckReport.skip(name, anchor, 'requires omega > 0')

    if tolerance is None:
        tolerance = settings.TOLERANCES['ladder_reps']

    x, t = sample_points(count, params, seed)

    worst = 0.0
    worst_case = None
    cases = 0

    for state in states_up_to(n_max):
        z, s = forward_map(x, t, energy_of(state, params), params)

        for axis in (1, 2, 3):
            for direction in DIRECTIONS:
                real = ladder_apply_real(state, axis, direction, x, t, params, norm_mode)
                conformal = ladder_apply_conformal(state, axis, direction, z, params, s, norm_mode)

                scale = max(float(np.max(np.abs(real))), np.finfo(float).tiny)
                deviation = float(np.max(np.abs(real - conformal)) / scale)
                cases += 1

                if deviation > worst or worst_case is None:
                    worst, worst_case = deviation, '%s %s axis %i' % (state, direction, axis)

    rep_agreement_check._debug('representation agreement worst case %s: %r', worst_case, worst)

    return CheckReport(name, anchor, worst, tolerance, OrderedDict([
        ('cases', cases),
        ('points', count),
        ('seed', seed),
        ('worst_case', worst_case),
    ]))


@qhoconf_debug
def adjointness_check(params, l_max=8, order=settings.QUAD_ORDER, norm_mode=UNIT_NORM, tolerance=None):
    """
    This function compares <a+ phi_l, phi_m> with <phi_l, a phi_m> by gauss-hermite quadrature for
    l, m <= l_max.

    :param params: OscillatorParams
    :param l_max: largest quantum number
    :param order: quadrature order
    :param norm_mode: normalization mode
    :param tolerance: pass threshold
    :return: CheckReport
    """

    name = 'adjoint'
    anchor = 'Eqs. (22)-(23)'

    if not params.bound:
        return CheckReport.skip(name, anchor, 'requires omega > 0')

    if tolerance is None:
        tolerance = settings.TOLERANCES['adjointness']

    rule = gauss_hermite(max(order, l_max + 2))
    polys = [eigen_poly(l, params, norm_mode) for l in range(l_max + 1)]

    def inner(left, right):
        return rule.integrate(lambda xi: left(xi) * right(xi)) / params.kappa

    worst = 0.0
    matrix_error = 0.0
    for l, left in enumerate(polys):
        for m, right in enumerate(polys):
            raised = inner(raise_poly(left), right)
            lowered = inner(left, lower_poly(right))
            worst = max(worst, abs(raised - lowered))

            # unit norm: <a+ phi_l, phi_m> = sqrt(l + 1) delta_{l+1, m}
            if norm_mode == UNIT_NORM:
                expected = math.sqrt(l + 1) if m == l + 1 else 0.0
                matrix_error = max(matrix_error, abs(raised - expected))

    return CheckReport(name, anchor, worst, tolerance, OrderedDict([
        ('l_max', l_max),
        ('quadrature_order', rule.order),
        ('matrix_element_error', matrix_error),
    ]))
