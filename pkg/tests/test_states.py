# pylint: disable=

"""
States Tests
------------

This module tests the oscillator parameters, the quantum number triples and the energies.
"""

import math

from hypothesis import given, strategies as st
import numpy as np
import pytest

from qhoconf.physics.states import OscillatorParams, StateLabel, states_up_to, energy_of, xi_coordinate, \
    potential_energy


def test_natural_units():
    params = OscillatorParams.natural()
    assert params.kappa == 1.0
    assert params.bound
    assert not OscillatorParams(omega=0.0).bound


@pytest.mark.parametrize('kwargs', [
    {'hbar': 0.0}, {'mass': -1.0}, {'omega': -0.1}, {'omega': float('nan')}, {'hbar': float('inf')},
])
def test_invalid_params(kwargs):
    with pytest.raises(ValueError):
        OscillatorParams(**kwargs)


def test_kappa():
    params = OscillatorParams(hbar=0.5, mass=2.0, omega=1.5)
    assert params.kappa == pytest.approx(math.sqrt(6.0))
    assert xi_coordinate(1.0, params) == pytest.approx(math.sqrt(6.0))


@pytest.mark.parametrize('value', [-1, 1.5, True])
def test_invalid_state(value):
    with pytest.raises(ValueError):
        StateLabel(value, 0, 0)


def test_state_parse_and_text():
    state = StateLabel.parse(' 1, 0 ,2')
    assert state == StateLabel(1, 0, 2)
    assert str(state) == '(1,0,2)'
    assert state.n == 3
    assert state[3] == 2
    assert state.replace(2, 4) == StateLabel(1, 4, 2)

    with pytest.raises(ValueError):
        StateLabel.parse('1,2')
    with pytest.raises(ValueError):
        StateLabel.parse('1,-2,0')


@given(st.integers(min_value=0, max_value=8))
def test_states_up_to(n_max):
    states = states_up_to(n_max)
    assert len(states) == (n_max + 1) * (n_max + 2) * (n_max + 3) // 6
    assert len(set(states)) == len(states)
    assert [state.n for state in states] == sorted(state.n for state in states)


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_energy(l1, l2, l3):
    params = OscillatorParams(hbar=0.5, mass=2.0, omega=1.5)
    energy = energy_of(StateLabel(l1, l2, l3), params)
    assert float(energy) == pytest.approx(0.75 * (l1 + l2 + l3 + 1.5))
    assert energy.n == l1 + l2 + l3


def test_potential_energy_counts_calls():
    params = OscillatorParams(mass=2.0, omega=3.0)
    before = potential_energy.calls
    value = potential_energy(np.array([[1.0, 0.0, 0.0], [1.0, 1.0, 1.0]]), params)
    np.testing.assert_allclose(value, [9.0, 27.0])
    assert potential_energy.calls == before + 1
