# pylint: disable=

"""
Numerics Package
----------------

This package contains the shared numerical kernels: gaussian quadrature and finite difference stencils.
"""

from .quadrature import QuadratureRule, build_rule, gauss_hermite, gauss_laguerre
from .stencil import StencilSpec, DerivativeEstimate, differentiate, derivative, convergence_order, \
    estimate_order
