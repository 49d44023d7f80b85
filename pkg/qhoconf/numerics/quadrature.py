# pylint: disable=invalid-name

"""
Quadrature Module
-----------------

This module builds Gauss-Hermite and Gauss-Laguerre rules from the three-term recurrence of their
orthogonal polynomials (Golub-Welsch).
"""

from dataclasses import dataclass
from functools import lru_cache
import math
import numbers

import numpy as np
from scipy.linalg import eigh_tridiagonal

from qhoconf import settings
from qhoconf.debugging import qhoconf_debug, ModuleLogger
from qhoconf.define import GAUSS_HERMITE, GAUSS_LAGUERRE, QUADRATURE_FAMILIES, OrderOutOfRange


# enabling logging
ModuleLogger()


@dataclass(frozen=True, eq=False)
class QuadratureRule(object):
    """
    This class holds the nodes and weights of one Gaussian rule. The weight function is not part of the
    weights: a rule integrates f against exp(-x^2) (hermite) or exp(-x) on [0, inf) (laguerre).
    """

    family: str
    order: int
    nodes: np.ndarray
    weights: np.ndarray

    def integrate(self, func):
        """
        This function integrates func against the weight function of the family.

        :param func: vectorized integrand without the weight factor
        :return: integral value
        """

        return np.dot(self.weights, func(self.nodes))

    @property
    def weight_total(self):
        """
        This function returns the zeroth moment of the weight function.

        :return: zeroth moment
        """

        return math.sqrt(math.pi) if self.family == GAUSS_HERMITE else 1.0


def _jacobi_matrix(family, order):
    """
    This function returns the diagonal and off-diagonal of the Jacobi matrix of a family.

    :param family: quadrature family
    :param order: number of nodes
    :return: diagonal, off-diagonal
    """

    k = np.arange(order, dtype=float)

    if family == GAUSS_HERMITE:
        # physicists' hermite: alpha_k = 0, beta_k = k / 2
        return np.zeros(order), np.sqrt(k[1:] / 2.0)

    # laguerre: alpha_k = 2k + 1, beta_k = k^2
    return 2.0 * k + 1.0, k[1:].copy()


@qhoconf_debug
@lru_cache(maxsize=None)
def build_rule(family, order):
    """
    This function builds a quadrature rule of the given family and order.

    :param family: 'gauss_hermite' or 'gauss_laguerre'
    :param order: number of nodes, 1 to 256
    :return: QuadratureRule
    """

    if family not in QUADRATURE_FAMILIES:
        raise ValueError('unknown quadrature family "%s"' % family)

    if not isinstance(order, numbers.Integral) or not 1 <= order <= settings.QUAD_ORDER_MAX:
        raise OrderOutOfRange(
            'quadrature order must be within 1..%i, got %r' % (settings.QUAD_ORDER_MAX, order)
        )

    order = int(order)
    diagonal, off_diagonal = _jacobi_matrix(family, order)
    mu0 = math.sqrt(math.pi) if family == GAUSS_HERMITE else 1.0

    if order == 1:
        nodes = diagonal.copy()
        weights = np.array([mu0])

    else:
        nodes, vectors = eigh_tridiagonal(diagonal, off_diagonal)
        weights = mu0 * vectors[0, :] ** 2

    # enforce the reflection symmetry of the hermite rule
    if family == GAUSS_HERMITE:
        nodes = 0.5 * (nodes - nodes[::-1])
        weights = 0.5 * (weights + weights[::-1])

    nodes.setflags(write=False)
    weights.setflags(write=False)

    rule = QuadratureRule(family, order, nodes, weights)

    if abs(weights.sum() - mu0) > 1e-12 * mu0:
        build_rule._warning('weights of %s(%i) sum to %r', family, order, weights.sum())

    build_rule._debug('built %s rule of order %i', family, order)

    return rule


def gauss_hermite(order):
    """
    This function returns the gauss-hermite rule of the given order.

    :param order: number of nodes
    :return: QuadratureRule
    """

    return build_rule(GAUSS_HERMITE, order)


def gauss_laguerre(order):
    """
    This function returns the gauss-laguerre rule of the given order.

    :param order: number of nodes
    :return: QuadratureRule
    """

    return build_rule(GAUSS_LAGUERRE, order)
