# pylint: disable=invalid-name

"""
Hermite Module
--------------

This module evaluates the physicists' Hermite polynomials H_l (leading coefficient 2^l) exactly and in
floating point.
"""

from dataclasses import dataclass
from functools import lru_cache
import math

import numpy as np
import sympy

from qhoconf import settings
from qhoconf.debugging import ModuleLogger
from qhoconf.define import DegreeTooLarge


# enabling logging
ModuleLogger()


def check_degree(l, l_max=None):
    """
    This function validates a hermite degree against the guard.

    :param l: degree
    :param l_max: guard, defaults to settings.L_MAX_GUARD
    :return: degree as int
    """

    if l_max is None:
        l_max = settings.L_MAX_GUARD

    if isinstance(l, bool) or int(l) != l or l < 0:
        raise ValueError('hermite degree must be a non-negative integer, got %r' % (l,))

    if l > l_max:
        raise DegreeTooLarge('hermite degree %i exceeds l_max = %i' % (l, l_max))

    return int(l)


@dataclass(frozen=True)
class HermitePoly(object):
    """
    This class holds the exact integer coefficients of H_degree, ascending powers.
    """

    degree: int
    coefficients: tuple

    def __call__(self, x):
        """
        This function evaluates the expanded coefficients (Horner scheme).

        :param x: argument
        :return: value
        """

        result = 0
        for coefficient in reversed(self.coefficients):
            result = result * x + coefficient

        return result

    def derivative(self):
        """
        This function returns the exact coefficients of the derivative.

        :return: tuple of integer coefficients
        """

        return tuple(k * c for k, c in enumerate(self.coefficients))[1:] or (0,)

    def as_sympy(self, symbol):
        """
        This function returns the polynomial as a sympy expression.

        :param symbol: sympy symbol
        :return: sympy expression
        """

        return sympy.Add(*(sympy.Integer(c) * symbol ** k for k, c in enumerate(self.coefficients)))


@lru_cache(maxsize=None)
def hermite_poly(l):
    """
    This function builds the exact coefficients of H_l from H_{l+1} = 2x H_l - 2l H_{l-1}.

    :param l: degree
    :return: HermitePoly
    """

    l = check_degree(l)

    previous, current = (), (1,)
    for k in range(l):
        shifted = (0,) + tuple(2 * c for c in current)
        lowered = tuple(2 * k * c for c in previous) + (0,) * (len(shifted) - len(previous))
        previous, current = current, tuple(a - b for a, b in zip(shifted, lowered))

    return HermitePoly(l, current)


def hermite_eval(l, x):
    """
    This function evaluates H_l(x) by the three-term recurrence.

    :param l: degree
    :param x: argument, scalar or array, real or complex
    :return: H_l(x)
    """

    l = check_degree(l)

    if np.ndim(x):
        x = np.asarray(x)

    previous = np.ones_like(x, dtype=np.result_type(x, float)) if np.ndim(x) else 1.0
    if l == 0:
        return previous

    current = 2.0 * x
    for k in range(1, l):
        previous, current = current, 2.0 * x * current - 2.0 * k * previous

    return current


def hermite_eval_all(l_max, x):
    """
    This function evaluates H_0 .. H_l_max by the recurrence in one pass.

    :param l_max: largest degree
    :param x: argument array
    :return: array of shape (l_max + 1,) + shape of x
    """

    l_max = check_degree(l_max)

    x = np.asarray(x)
    values = np.empty((l_max + 1,) + x.shape, dtype=np.result_type(x, float))
    values[0] = 1.0

    if l_max > 0:
        values[1] = 2.0 * x

    for k in range(1, l_max):
        values[k + 1] = 2.0 * x * values[k] - 2.0 * k * values[k - 1]

    return values


def hermite_derivative(l, x):
    """
    This function evaluates H_l'(x) = 2l H_{l-1}(x).

    :param l: degree
    :param x: argument
    :return: derivative value
    """

    l = check_degree(l)

    if l == 0:
        return np.zeros_like(x, dtype=np.result_type(x, float)) if np.ndim(x) else 0.0

    return 2.0 * l * hermite_eval(l - 1, x)


def hermite_series(l, x):
    """
    This function evaluates H_l(x) = l! sum_m (-1)^m (2x)^(l-2m) / (m! (l-2m)!) term by term. Exact for
    integer or Fraction arguments.

    :param l: degree
    :param x: argument
    :return: H_l(x)
    """

    l = check_degree(l)

    return sum(
        (-1) ** m * (math.factorial(l) // (math.factorial(m) * math.factorial(l - 2 * m)))
        * (2 * x) ** (l - 2 * m)
        for m in range(l // 2 + 1)
    )


def hermite_at_zero(l):
    """
    This function returns the closed form H_l(0) = (-1)^(l/2) l! / (l/2)! for even l and 0 for odd l.

    :param l: degree
    :return: exact integer
    """

    l = check_degree(l)

    if l % 2:
        return 0

    return (-1) ** (l // 2) * math.factorial(l) // math.factorial(l // 2)
