# pylint: disable=

"""
Hermite Tests
-------------

This module tests the physicists' hermite polynomials.
"""

from fractions import Fraction

from hypothesis import given, strategies as st
import numpy as np
from numpy.polynomial import hermite as numpy_hermite
import pytest
import sympy

from qhoconf.define import DegreeTooLarge
from qhoconf.physics.hermite import hermite_poly, hermite_eval, hermite_eval_all, hermite_derivative, \
    hermite_series, hermite_at_zero, check_degree


def test_low_degrees():
    assert hermite_poly(0).coefficients == (1,)
    assert hermite_poly(1).coefficients == (0, 2)
    assert hermite_poly(3).coefficients == (0, -12, 0, 8)
    assert hermite_poly(4).coefficients == (12, 0, -48, 0, 16)


@given(st.integers(min_value=0, max_value=30))
def test_recurrence_matches_numpy(l):
    x = np.linspace(-3.0, 3.0, 13)
    expected = numpy_hermite.hermval(x, [0] * l + [1])
    np.testing.assert_allclose(hermite_eval(l, x), expected, rtol=1e-10,
                               atol=1e-10 * np.max(np.abs(expected)))


@given(st.integers(min_value=0, max_value=20), st.fractions(min_value=-3, max_value=3, max_denominator=7))
def test_series_is_exact(l, x):
    assert hermite_series(l, x) == hermite_poly(l)(x)


def test_all_degrees_in_one_pass():
    x = np.array([-1.0, 0.25, 2.0])
    values = hermite_eval_all(8, x)
    for l in range(9):
        np.testing.assert_allclose(values[l], hermite_eval(l, x), rtol=1e-14)


def test_derivative_rule():
    x = sympy.Symbol('x')
    for l in range(1, 8):
        expected = sympy.Poly(sympy.diff(hermite_poly(l).as_sympy(x), x), x).all_coeffs()[::-1]
        assert hermite_poly(l).derivative() == tuple(int(c) for c in expected)

    assert hermite_poly(0).derivative() == (0,)
    assert hermite_derivative(3, 0.5) == pytest.approx(6.0 * hermite_eval(2, 0.5))


def test_values_at_zero():
    assert [hermite_at_zero(l) for l in range(7)] == [1, 0, -2, 0, 12, 0, -120]
    for l in range(12):
        assert hermite_at_zero(l) == hermite_series(l, Fraction(0))


def test_complex_argument():
    z = 0.3 + 0.4j
    assert hermite_eval(2, z) == pytest.approx(4 * z ** 2 - 2)


def test_degree_guard():
    with pytest.raises(DegreeTooLarge):
        hermite_eval(65, 0.0)
    with pytest.raises(DegreeTooLarge):
        check_degree(21, 20)
    with pytest.raises(ValueError):
        check_degree(-1)
