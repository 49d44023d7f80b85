# pylint: disable=invalid-name

"""
Stencil Module
--------------

This module provides central finite differences with Richardson extrapolation and convergence order
estimates.
"""

from dataclasses import dataclass
import math

import numpy as np

from qhoconf import settings
from qhoconf.debugging import ModuleLogger
from qhoconf.define import StencilOutOfDomain


# enabling logging
ModuleLogger()


# central stencils: offsets in units of the step and weights before the division by step^order
STENCILS = {
    1: ((-1, 1), (-0.5, 0.5)),
    2: ((-1, 0, 1), (1.0, -2.0, 1.0)),
    4: ((-2, -1, 0, 1, 2), (1.0, -4.0, 6.0, -4.0, 1.0)),
}


@dataclass(frozen=True)
class StencilSpec(object):
    """
    This class describes a central difference stencil.
    """

    step: float = settings.STEP
    richardson_levels: int = settings.RICHARDSON_LEVELS
    derivative_order: int = 1

    def __post_init__(self):
        if not self.step > 0:
            raise ValueError('stencil step must be positive, got %r' % self.step)
        if self.richardson_levels not in (0, 1, 2):
            raise ValueError('richardson levels must be 0, 1 or 2, got %r' % self.richardson_levels)
        if self.derivative_order not in STENCILS:
            raise ValueError('derivative order must be 1, 2 or 4, got %r' % self.derivative_order)

    @property
    def reach(self):
        """
        This function returns the largest stencil offset in units of the step.

        :return: largest offset
        """

        return max(STENCILS[self.derivative_order][0])

    @property
    def theoretical_order(self):
        """
        This function returns the truncation order of the extrapolated estimate.

        :return: order in the step
        """

        return 2 + 2 * self.richardson_levels


@dataclass(frozen=True)
class DerivativeEstimate(object):
    """
    This class holds a derivative estimate and its error estimate.
    """

    value: object
    error: object


def _raw(func, point, step, order):
    """
    This function evaluates one plain central difference.

    :param func: function of one variable
    :param point: evaluation point (scalar or array)
    :param step: step
    :param order: derivative order
    :return: difference quotient
    """

    offsets, weights = STENCILS[order]

    total = 0.0
    for offset, weight in zip(offsets, weights):
        if offset == 0:
            total = total + weight * func(point)
        else:
            total = total + weight * func(point + offset * step)

    return total / step ** order


def _check_domain(point, spec, domain):
    """
    This function verifies that the widest stencil lies inside the domain.

    :param point: evaluation point
    :param spec: StencilSpec
    :param domain: (lower, upper) bounds or None
    :return: None
    """

    if domain is None:
        return

    lower, upper = domain
    reach = spec.reach * spec.step
    point = np.asarray(point)

    if np.any(point - reach < lower) or np.any(point + reach > upper):
        raise StencilOutOfDomain(
            'stencil of half width %g leaves the domain [%g, %g]' % (reach, lower, upper)
        )


def differentiate(func, point, spec=None, domain=None):
    """
    This function estimates a derivative by central differences combined with Richardson
    extrapolation.

    :param func: function of one variable, vectorized if point is an array
    :param point: evaluation point (scalar or array)
    :param spec: StencilSpec
    :param domain: optional (lower, upper) bounds of the variable
    :return: DerivativeEstimate
    """

    if spec is None:
        spec = StencilSpec()

    _check_domain(point, spec, domain)

    levels = spec.richardson_levels

    # first column of the tableau: steps h, h/2, ... one more than needed for the error estimate
    table = [[_raw(func, point, spec.step / 2 ** j, spec.derivative_order) for j in range(levels + 2)]]

    for k in range(1, levels + 2):
        factor = 4.0 ** k
        previous = table[k - 1]
        table.append([
            (factor * previous[j + 1] - previous[j]) / (factor - 1.0)
            for j in range(len(previous) - 1)
        ])

    value = table[levels][0]
    error = np.abs(value - table[levels][1])

    if np.ndim(error) == 0:
        error = float(error)

    return DerivativeEstimate(value, error)


def derivative(func, point, order=1, step=None, levels=None):
    """
    This function returns only the value of a derivative estimate.

    :param func: function of one variable
    :param point: evaluation point
    :param order: derivative order
    :param step: step, defaults by order
    :param levels: richardson levels
    :return: derivative estimate
    """

    if step is None:
        step = settings.STEP_FOURTH if order == 4 else settings.STEP

    if levels is None:
        levels = settings.RICHARDSON_LEVELS

    return differentiate(func, point, StencilSpec(step, levels, order)).value


def convergence_order(coarse_error, fine_error, ratio=2.0):
    """
    This function converts the errors of two step sizes into an observed order.

    :param coarse_error: error at the larger step
    :param fine_error: error at the step divided by ratio
    :param ratio: step ratio
    :return: observed order, nan when undefined
    """

    coarse_error = abs(coarse_error)
    fine_error = abs(fine_error)

    if coarse_error == 0.0 or fine_error == 0.0:
        return float('nan')

    return math.log(coarse_error / fine_error) / math.log(ratio)


def estimate_order(estimator, step):
    """
    This function estimates the convergence order of an estimator without a reference value from
    three successive step halvings.

    :param estimator: function of the step returning an estimate
    :param step: largest step
    :return: observed order
    """

    coarse, middle, fine = (estimator(step / 2 ** j) for j in range(3))

    return convergence_order(np.max(np.abs(coarse - middle)), np.max(np.abs(middle - fine)))
