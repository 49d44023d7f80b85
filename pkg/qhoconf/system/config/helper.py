# pylint: disable=

"""
Config Helper Module
--------------------

This module parses the comma separated triples of the command line.
"""

import math

from qhoconf.define import ConfigInvalid
from qhoconf.physics.states import StateLabel


def parse_state(text):
    """
    This function parses a quantum number triple such as "1,0,0".

    :param text: command line text
    :return: StateLabel or None
    """

    if text is None:
        return None

    try:
        return StateLabel.parse(text)

    except ValueError as error:
        raise ConfigInvalid(str(error))


def parse_point(text):
    """
    This function parses a position triple such as "1,2,3".

    :param text: command line text
    :return: tuple of three floats or None
    """

    if text is None:
        return None

    parts = str(text).split(',')
    if len(parts) != 3:
        raise ConfigInvalid('position must be three numbers "x1,x2,x3", got %r' % text)

    try:
        point = tuple(float(part) for part in parts)

    except ValueError:
        raise ConfigInvalid('position must be three numbers "x1,x2,x3", got %r' % text)

    if not all(math.isfinite(value) for value in point):
        raise ConfigInvalid('position must be finite, got %r' % text)

    return point


def parse_tolerance(text):
    """
    This function parses a tolerance override such as "orthonormality=1e-8".

    :param text: command line text
    :return: (key, value)
    """

    key, sep, value = str(text).partition('=')
    if not sep or not key.strip():
        raise ConfigInvalid('tolerance override must read NAME=VALUE, got %r' % text)

    try:
        return key.strip(), float(value)

    except ValueError:
        raise ConfigInvalid('tolerance override %r has no numeric value' % text)
