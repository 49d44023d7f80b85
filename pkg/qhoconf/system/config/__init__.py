# pylint: disable=too-many-instance-attributes, too-many-branches

"""
Config Module
-------------

This module holds the validated command line configuration. Every flag mirrors one field.
"""

from collections import OrderedDict
from dataclasses import dataclass, field
import math

from qhoconf import settings
from qhoconf.debugging import ModuleLogger
from qhoconf.define import ConfigInvalid, NORM_MODES, KERNEL_SIGNS, PREFACTOR_MODES, FORMATS
from qhoconf.physics.states import OscillatorParams, StateLabel


ModuleLogger()


def _finite(name, value, minimum=None, strict=False):
    """
    This function validates a real number.

    :param name: field name
    :param value: value
    :param minimum: lower bound
    :param strict: exclude the lower bound
    :return: float
    """

    try:
        value = float(value)
    except (TypeError, ValueError):
        raise ConfigInvalid('%s must be a number, got %r' % (name, value))

    if not math.isfinite(value):
        raise ConfigInvalid('%s must be finite, got %r' % (name, value))

    if minimum is not None and (value < minimum or (strict and value == minimum)):
        raise ConfigInvalid('%s must be %s %r, got %r' % (name, '>' if strict else '>=', minimum, value))

    return value


def _integer(name, value, minimum, maximum):
    """
    This function validates an integer within bounds.

    :param name: field name
    :param value: value
    :param minimum: lower bound
    :param maximum: upper bound
    :return: int
    """

    if isinstance(value, bool) or not isinstance(value, int) or not minimum <= value <= maximum:
        raise ConfigInvalid('%s must be an integer in [%i, %i], got %r' % (name, minimum, maximum, value))

    return value


def _choice(name, value, choices):
    """
    This function validates a mode name.

    :param name: field name
    :param value: value
    :param choices: allowed names
    :return: value
    """

    if value not in choices:
        raise ConfigInvalid('%s must be one of %s, got %r' % (name, ', '.join(choices), value))

    return value


@dataclass(frozen=True)
class CliConfig(object):
    """
    This class holds one command line invocation. The defaults reproduce the full acceptance run.
    """

    command: str = 'verify'
    target: str = None
    hbar: float = settings.HBAR
    mass: float = settings.MASS
    omega: float = settings.OMEGA
    l_max: int = settings.L_MAX
    grid_extent: float = settings.GRID_EXTENT
    grid_points: int = settings.GRID_POINTS
    quad_order: int = settings.QUAD_ORDER
    tolerance_scale: float = 1.0
    tolerances: dict = field(default_factory=dict)
    norm_mode: str = settings.NORM_MODE
    kernel_sign: str = settings.KERNEL_SIGN
    prefactor_mode: str = settings.PREFACTOR_MODE
    seed: int = settings.SEED
    output_format: str = settings.OUTPUT_FORMAT
    out: str = None
    state: StateLabel = None
    x: tuple = None
    t: float = None

    def __post_init__(self):
        try:
            OscillatorParams(
                _finite('hbar', self.hbar), _finite('mass', self.mass), _finite('omega', self.omega),
            )
        except ValueError as error:
            raise ConfigInvalid(str(error))

        _integer('lmax', self.l_max, 0, settings.L_MAX_GUARD)
        _finite('grid-extent', self.grid_extent, 0.0, strict=True)
        _integer('grid-points', self.grid_points, 2, 10 ** 6)
        # the convergence test refines beyond the requested order
        _integer('quad-order', self.quad_order, 1, settings.QUAD_ORDER_MAX - settings.CONVERGENCE_EXTRA_ORDER)
        _finite('tolerance-scale', self.tolerance_scale, 0.0)
        _integer('seed', self.seed, 0, 2 ** 32 - 1)

        for key, value in self.tolerances.items():
            if key not in settings.TOLERANCES:
                raise ConfigInvalid('unknown tolerance %r, choose from: %s' % (
                    key, ', '.join(sorted(settings.TOLERANCES))))
            _finite('tolerance %s' % key, value, 0.0)

        _choice('norm-mode', self.norm_mode, NORM_MODES)
        _choice('kernel-sign', self.kernel_sign, KERNEL_SIGNS)
        _choice('prefactor-mode', self.prefactor_mode, PREFACTOR_MODES)
        _choice('format', self.output_format, FORMATS)

        if self.state is not None and not isinstance(self.state, StateLabel):
            raise ConfigInvalid('state must be a StateLabel, got %r' % (self.state,))

        if self.x is not None and len(self.x) != 3:
            raise ConfigInvalid('x must hold three coordinates, got %r' % (self.x,))

        if self.t is not None:
            _finite('t', self.t)

    @property
    def params(self):
        """
        This function returns the oscillator parameters.

        :return: OscillatorParams
        """

        return OscillatorParams(float(self.hbar), float(self.mass), float(self.omega))

    def snapshot(self):
        """
        This function returns every field a report depends on. Output destination is left out so
        that the same run writes the same report anywhere.

        :return: OrderedDict
        """

        return OrderedDict([
            ('params', OrderedDict(sorted(self.params.as_dict().items()))),
            ('l_max', self.l_max),
            ('grid_extent', self.grid_extent),
            ('grid_points', self.grid_points),
            ('quad_order', self.quad_order),
            ('tolerance_scale', self.tolerance_scale),
            ('tolerances', OrderedDict(sorted(self.tolerances.items()))),
            ('norm_mode', self.norm_mode),
            ('kernel_sign', self.kernel_sign),
            ('prefactor_mode', self.prefactor_mode),
            ('seed', self.seed),
            ('state', None if self.state is None else list(self.state)),
            ('x', None if self.x is None else list(self.x)),
            ('t', self.t),
        ])
