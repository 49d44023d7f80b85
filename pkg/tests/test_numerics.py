# pylint: disable=

"""
Numerics Tests
--------------

This module tests the gaussian quadrature rules and the finite difference stencils.
"""

import math

from hypothesis import given, strategies as st
import numpy as np
import pytest

from qhoconf.define import OrderOutOfRange, StencilOutOfDomain
from qhoconf.numerics import StencilSpec, build_rule, gauss_hermite, gauss_laguerre, differentiate, \
    derivative, convergence_order, estimate_order


def test_hermite_weights_sum_to_sqrt_pi():
    for order in (1, 2, 10, 64, 256):
        assert gauss_hermite(order).weights.sum() == pytest.approx(math.sqrt(math.pi), rel=1e-12)


def test_hermite_nodes_are_symmetric():
    rule = gauss_hermite(31)
    np.testing.assert_array_equal(rule.nodes, -rule.nodes[::-1])
    assert rule.nodes[15] == 0.0


def test_laguerre_moments():
    rule = gauss_laguerre(10)
    for k in range(10):
        assert rule.integrate(lambda x, k=k: x ** k) == pytest.approx(math.factorial(k), rel=1e-10)


@given(st.integers(min_value=0, max_value=12), st.integers(min_value=0, max_value=20))
def test_hermite_rule_is_exact_up_to_degree_2n_minus_1(k, extra):
    order = k + 1 + extra
    value = gauss_hermite(order).integrate(lambda x: x ** (2 * k))
    assert value == pytest.approx(math.gamma(k + 0.5), rel=1e-10)


def test_odd_moments_vanish():
    assert abs(gauss_hermite(20).integrate(lambda x: x ** 7)) < 1e-12


@pytest.mark.parametrize('order', [0, 257, 2.5])
def test_order_out_of_range(order):
    with pytest.raises(OrderOutOfRange):
        gauss_hermite(order)


def test_unknown_family():
    with pytest.raises(ValueError):
        build_rule('gauss_legendre', 10)


def test_rules_are_cached_and_read_only():
    assert gauss_laguerre(12) is gauss_laguerre(12)
    with pytest.raises(ValueError):
        gauss_laguerre(12).nodes[0] = 1.0


def test_first_derivative_of_sine():
    points = np.linspace(-2.0, 2.0, 9)
    estimate = differentiate(np.sin, points)
    np.testing.assert_allclose(estimate.value, np.cos(points), atol=1e-11)
    assert np.all(estimate.error < 1e-9)


def test_second_and_fourth_derivative_of_exponential():
    assert derivative(np.exp, 0.3, order=2) == pytest.approx(math.exp(0.3), rel=1e-7)
    assert derivative(np.exp, 0.3, order=4) == pytest.approx(math.exp(0.3), rel=1e-4)


def test_richardson_raises_the_order():
    plain = differentiate(np.exp, 1.0, StencilSpec(1e-2, 0, 1)).value
    extrapolated = differentiate(np.exp, 1.0, StencilSpec(1e-2, 2, 1)).value
    assert abs(extrapolated - math.e) < abs(plain - math.e) * 1e-4


def test_stencil_domain():
    with pytest.raises(StencilOutOfDomain):
        differentiate(np.sqrt, 0.0005, StencilSpec(1e-3, 1, 1), domain=(0.0, np.inf))

    estimate = differentiate(np.sqrt, 1.0, StencilSpec(1e-3, 1, 1), domain=(0.0, np.inf))
    assert estimate.value == pytest.approx(0.5, rel=1e-10)


@pytest.mark.parametrize('kwargs', [{'step': 0.0}, {'richardson_levels': 3}, {'derivative_order': 3}])
def test_invalid_stencil(kwargs):
    with pytest.raises(ValueError):
        StencilSpec(**kwargs)


def test_convergence_order():
    assert convergence_order(4e-4, 1e-4) == pytest.approx(2.0)
    assert math.isnan(convergence_order(0.0, 1e-4))


def test_estimate_order_of_plain_central_difference():
    order = estimate_order(lambda h: (np.sin(1.0 + h) - np.sin(1.0 - h)) / (2.0 * h), 0.1)
    assert order == pytest.approx(2.0, abs=0.05)
