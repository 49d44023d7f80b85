# pylint: disable=redefined-outer-name

"""
Test Fixtures
-------------

This module provides the shared fixtures of the test suite.
"""

import pytest

from qhoconf.physics.states import OscillatorParams
from qhoconf.system.config import CliConfig


@pytest.fixture
def natural():
    """
    This function returns the natural unit oscillator.

    :return: OscillatorParams
    """

    return OscillatorParams.natural()


@pytest.fixture
def scaled():
    """
    This function returns an oscillator with non-trivial units.

    :return: OscillatorParams
    """

    return OscillatorParams(hbar=0.5, mass=2.0, omega=1.5)


@pytest.fixture
def free():
    """
    This function returns the free-field limit.

    :return: OscillatorParams
    """

    return OscillatorParams(omega=0.0)


@pytest.fixture
def config():
    """
    This function returns the default command line configuration.

    :return: CliConfig
    """

    return CliConfig()
