# pylint: disable=invalid-name

"""
States Module
-------------

This module owns the physical parameters, the quantum number triples and their energies.
"""

from dataclasses import dataclass
import math
import numbers

import numpy as np

from qhoconf import settings
from qhoconf.debugging import ModuleLogger


# enabling logging
ModuleLogger()


@dataclass(frozen=True)
class OscillatorParams(object):
    """
    This class holds hbar (J s), mass (kg) and the angular frequency omega (rad/s). omega = 0 is the
    free-field limit.
    """

    hbar: float = settings.HBAR
    mass: float = settings.MASS
    omega: float = settings.OMEGA

    def __post_init__(self):
        for name in ('hbar', 'mass', 'omega'):
            value = getattr(self, name)
            if not isinstance(value, numbers.Real) or not math.isfinite(value):
                raise ValueError('%s must be a finite real number, got %r' % (name, value))

        if self.hbar <= 0:
            raise ValueError('hbar must be positive, got %r' % self.hbar)

        if self.mass <= 0:
            raise ValueError('mass must be positive, got %r' % self.mass)

        if self.omega < 0:
            raise ValueError('omega must not be negative, got %r' % self.omega)

    @classmethod
    def natural(cls):
        """
        This function returns the natural unit preset hbar = mass = omega = 1.

        :return: OscillatorParams
        """

        return cls(1.0, 1.0, 1.0)

    @property
    def kappa(self):
        """
        This function returns the xi scale factor sqrt(m omega / hbar).

        :return: inverse length
        """

        return math.sqrt(self.mass * self.omega / self.hbar)

    @property
    def bound(self):
        """
        This function tells whether the oscillator confines (omega > 0).

        :return: bool
        """

        return self.omega > 0

    def as_dict(self):
        """
        This function returns the parameters in a fixed order.

        :return: dict
        """

        return {'hbar': self.hbar, 'mass': self.mass, 'omega': self.omega}


@dataclass(frozen=True, order=True)
class StateLabel(object):
    """
    This class holds the quantum number triple (l1, l2, l3).
    """

    l1: int = 0
    l2: int = 0
    l3: int = 0

    def __post_init__(self):
        for value in (self.l1, self.l2, self.l3):
            if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < 0:
                raise ValueError('quantum numbers must be non-negative integers, got %r' % (value,))

    def __iter__(self):
        return iter((self.l1, self.l2, self.l3))

    def __getitem__(self, axis):
        """
        This function returns the component of an axis.

        :param axis: axis 1..3
        :return: quantum number
        """

        return tuple(self)[_axis_index(axis)]

    def __str__(self):
        return '(%i,%i,%i)' % tuple(self)

    @property
    def n(self):
        """
        This function returns the total degree l1 + l2 + l3.

        :return: total degree
        """

        return self.l1 + self.l2 + self.l3

    def replace(self, axis, value):
        """
        This function returns a copy with one component replaced.

        :param axis: axis 1..3
        :param value: new quantum number
        :return: StateLabel
        """

        components = list(self)
        components[_axis_index(axis)] = value

        return StateLabel(*components)

    @classmethod
    def parse(cls, text):
        """
        This function parses a comma separated triple.

        :param text: text such as "1,2,3"
        :return: StateLabel
        """

        parts = [part.strip() for part in str(text).split(',')]
        if len(parts) != 3 or not all(part.isdigit() for part in parts):
            raise ValueError('state must be three non-negative integers "l1,l2,l3", got %r' % text)

        return cls(*(int(part) for part in parts))


def _axis_index(axis):
    """
    This function converts an axis 1..3 into an index.

    :param axis: axis 1..3
    :return: index 0..2
    """

    if axis not in (1, 2, 3):
        raise ValueError('axis must be 1, 2 or 3, got %r' % (axis,))

    return axis - 1


def states_up_to(n_max):
    """
    This function lists every state with total degree at most n_max in a fixed order.

    :param n_max: largest total degree
    :return: list of StateLabel
    """

    return [
        StateLabel(l1, l2, n - l1 - l2)
        for n in range(n_max + 1)
        for l1 in range(n, -1, -1)
        for l2 in range(n - l1, -1, -1)
    ]


@dataclass(frozen=True)
class Energy(object):
    """
    This class holds an energy (J) together with the total degree it came from.
    """

    value: float
    n: int

    def __float__(self):
        return float(self.value)


def energy_of(state, params):
    """
    This function returns hbar omega (n + 3/2).

    :param state: StateLabel
    :param params: OscillatorParams
    :return: Energy
    """

    return Energy(params.hbar * params.omega * (state.n + 1.5), state.n)


def xi_coordinate(x, params):
    """
    This function returns the dimensionless coordinate sqrt(m omega / hbar) x.

    :param x: length, scalar or array
    :param params: OscillatorParams
    :return: dimensionless coordinate
    """

    return params.kappa * np.asarray(x) if isinstance(x, (list, tuple, np.ndarray)) else params.kappa * x


def potential_energy(x, params):
    """
    This function returns the oscillator potential m omega^2 x^2 / 2 for a 3-vector or an array of
    3-vectors (last axis).

    :param x: position
    :param params: OscillatorParams
    :return: potential energy
    """

    potential_energy.calls += 1

    x = np.asarray(x, dtype=float)

    return 0.5 * params.mass * params.omega ** 2 * np.sum(x ** 2, axis=-1)


potential_energy.calls = 0
