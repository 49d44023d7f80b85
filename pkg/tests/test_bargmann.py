# pylint: disable=

"""
Bargmann Tests
--------------

This module tests the integral transforms and the exact ladder algebra of the complex spaces.
"""

import math

from hypothesis import given, settings as hypothesis_settings, strategies as st
import pytest
import sympy

from qhoconf.define import DomainError, QuadratureOrderTooLow, KERNEL_MINUS, PREFACTOR_PAPER, LOWER, RAISE, \
    SPACES, SPACE_CONJUGATE, PREFACTOR_TABLE
from qhoconf.physics.bargmann import sb_transform, sb_closed_form, conjugate_transform, \
    conjugate_closed_form, LaurentMonomial, LaurentPolynomial, bargmann_monomial, TABLE1, table1_row, \
    table1_ladder_check, table1_commutator_check, table1_schrodinger_check, sb_transform_check, \
    conjugate_transform_check, prefactor_ratio_check
from qhoconf.physics.states import StateLabel


@pytest.mark.parametrize('a', [0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0])
def test_segal_bargmann_closed_form(a):
    for l in range(9):
        assert sb_transform(l, a) == pytest.approx(sb_closed_form(l, a), abs=1e-8)


def test_segal_bargmann_minus_kernel_flips_odd_degrees():
    assert sb_transform(3, 1.0, kernel_sign=KERNEL_MINUS) == pytest.approx(-sb_transform(3, 1.0), abs=1e-12)
    assert sb_closed_form(3, 1.0, KERNEL_MINUS) == pytest.approx(-1.0 / math.sqrt(6.0))


def test_segal_bargmann_order_guard():
    with pytest.raises(QuadratureOrderTooLow):
        sb_transform(8, 1.0, order=20)
    with pytest.raises(ValueError):
        sb_transform(1, 1.0, kernel_sign='both')


@given(st.integers(0, 12), st.floats(min_value=0.5, max_value=4.0))
def test_conjugate_transform(l, b):
    assert conjugate_transform(l, b) == pytest.approx(conjugate_closed_form(l, b), rel=1e-10)


def test_conjugate_prefactor():
    ratio = conjugate_transform(2, 1.5, PREFACTOR_PAPER) / conjugate_transform(2, 1.5)
    assert ratio == pytest.approx(math.pi ** -0.25, rel=1e-14)
    assert conjugate_closed_form(0, 1.0, PREFACTOR_PAPER) == pytest.approx(math.pi ** -0.25)


@pytest.mark.parametrize('b', [0.0, -1.0, 1j, True])
def test_conjugate_domain(b):
    with pytest.raises(DomainError):
        conjugate_transform(1, b)


def test_laurent_monomials():
    product = bargmann_monomial(2) * LaurentMonomial(sympy.Integer(3), -1)
    assert product.power == 1
    assert product.derivative() == LaurentMonomial(product.coefficient, 0)
    assert product(2) == sympy.Integer(6) / sympy.sqrt(2)


def test_laurent_polynomial_algebra():
    x = LaurentPolynomial({(1,): 1})
    inverse = LaurentPolynomial({(-1,): 1})
    assert (x * inverse).terms == {(0,): 1}
    assert (x - x).is_zero()
    assert not (x - x).terms
    assert inverse.derivative(1).terms == {(-2,): -1}
    assert x.multiply(1).terms == {(2,): 1}
    assert (x.scale(sympy.sqrt(2)) + x).ratio_to(x) == 1 + sympy.sqrt(2)
    assert x.ratio_to(inverse) is None

    with pytest.raises(ValueError):
        LaurentPolynomial({(1, 2): 1})


def test_table1_rows():
    assert list(TABLE1) == list(SPACES)
    assert table1_row(SPACE_CONJUGATE).lower_op == 'b'
    with pytest.raises(ValueError):
        table1_row('fock')


@pytest.mark.parametrize('space', SPACES)
def test_table1_ladders(space):
    for l in range(7):
        for direction in (LOWER, RAISE):
            report = table1_ladder_check(space, l, direction)
            if report.skipped:
                continue

            assert report.passed
            assert report.tolerance == 0.0
            assert report.details['exact']

        assert table1_commutator_check(space, l).passed


def test_conjugate_lowering_skips_vacuum():
    report = table1_ladder_check(SPACE_CONJUGATE, 0, LOWER)
    assert report.skipped


@hypothesis_settings(max_examples=15, deadline=None)
@given(st.sampled_from(SPACES), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2))
def test_table1_eigenvalue(space, l1, l2, l3):
    state = StateLabel(l1, l2, l3)
    report = table1_schrodinger_check(space, state)
    assert report.passed
    assert report.details['eigenvalue'] == str(sympy.Rational(2 * state.n + 3, 2))


def test_transform_checks():
    assert sb_transform_check().passed
    assert sb_transform_check(kernel_sign=KERNEL_MINUS).passed
    assert sb_transform_check().details['opposite_sign_deviation_from_parity'] < 1e-10
    assert conjugate_transform_check().passed
    assert prefactor_ratio_check().passed


@pytest.mark.parametrize('mode, normalization, ratio', [
    (PREFACTOR_TABLE, 1.0, math.pi ** 0.25),
    (PREFACTOR_PAPER, math.pi ** -0.25, math.pi ** -0.25),
])
def test_conjugate_checks_follow_prefactor_mode(mode, normalization, ratio):
    report = conjugate_transform_check(prefactor_mode=mode)
    assert report.passed
    assert report.details['prefactor_mode'] == mode
    assert report.details['normalization'] == pytest.approx(normalization, rel=1e-12)

    report = prefactor_ratio_check(prefactor_mode=mode)
    assert report.passed
    assert report.details['expected_ratio'] == pytest.approx(ratio)
    assert report.details['min_ratio'] == pytest.approx(ratio, rel=1e-12)
