# pylint: disable=too-few-public-methods, invalid-name

"""
Config Parser Module
--------------------

This module provides the argument parser of the verification system.
"""

from argparse import ArgumentParser

from qhoconf import settings
from qhoconf.debugging import qhoconf_debug, ModuleLogger
from qhoconf.define import ConfigInvalid, NORM_MODES, KERNEL_SIGNS, PREFACTOR_MODES, FORMATS
from qhoconf.system.config import CliConfig
from qhoconf.system.config.helper import parse_state, parse_point, parse_tolerance
from qhoconf.system.version import get_version


# enabling logging
ModuleLogger(details=1)


@qhoconf_debug(formatter='%(levelname)s:%(module)s: %(message)s')
class FullArgumentParser(ArgumentParser):
    """
    This class combines the physical, numerical and output flags with the logging flags.
    """

    arg_object = None

    def __init__(self, **kwargs):
        """
        This function constructs the parser.

        :return: FullArgumentParser instance
        """

        self._debug('%s.__init__', FullArgumentParser.__name__)

        # get commands
        commands = kwargs.pop('commands', [])

        # call predecessor constructor
        ArgumentParser.__init__(self, **kwargs)

        # print version
        self.add_argument('--version', action='version', version=get_version())

        # physical parameters
        self.add_argument('--hbar', type=float, default=settings.HBAR, help='reduced Planck constant (J s)')
        self.add_argument('--mass', type=float, default=settings.MASS, help='particle mass (kg)')
        self.add_argument('--omega', type=float, default=settings.OMEGA, help='angular frequency (rad/s)')

        # numerical parameters
        self.add_argument('--lmax', type=int, default=settings.L_MAX, dest='l_max',
                          help='largest one dimensional quantum number of tables and gram matrices')
        self.add_argument('--grid-extent', type=float, default=settings.GRID_EXTENT, dest='grid_extent',
                          help='half width of the tabulation grid in xi units')
        self.add_argument('--grid-points', type=int, default=settings.GRID_POINTS, dest='grid_points',
                          help='points of the tabulation grid')
        self.add_argument('--quad-order', type=int, default=settings.QUAD_ORDER, dest='quad_order',
                          help='gauss quadrature order')
        self.add_argument('--tolerance-scale', type=float, default=1.0, dest='tolerance_scale',
                          help='multiply every tolerance')
        self.add_argument('--tolerance', action='append', default=[], dest='tolerances', metavar='NAME=VALUE',
                          help='override one tolerance')

        # modes
        self.add_argument('--norm-mode', choices=NORM_MODES, default=settings.NORM_MODE, dest='norm_mode',
                          help='eigenfunction normalization')
        self.add_argument('--kernel-sign', choices=KERNEL_SIGNS, default=settings.KERNEL_SIGN,
                          dest='kernel_sign', help='cross term sign of the segal-bargmann kernel')
        self.add_argument('--prefactor-mode', choices=PREFACTOR_MODES, default=settings.PREFACTOR_MODE,
                          dest='prefactor_mode', help='prefactor of the conjugate transform')
        self.add_argument('--seed', type=int, default=settings.SEED, help='seed of the random sample points')

        # single checks and tables
        self.add_argument('--state', default=None, help='quantum numbers "l1,l2,l3"')
        self.add_argument('--x', default=None, help='position "x1,x2,x3"')
        self.add_argument('--t', type=float, default=None, help='time (s)')

        # output
        self.add_argument('--format', choices=FORMATS, default=settings.OUTPUT_FORMAT, dest='output_format',
                          help='report format')
        self.add_argument('--out', default=None, help='write the result to this path instead of stdout')

        # set verbose mode
        self.add_argument('--verbose', '-v', help='print log output to stderr', action='store_true',
                          dest='verbose')

        # set debug level
        self.add_argument('--level', '-d', help='define debug level', dest='level', default=None)

        # set debug logger
        self.add_argument('--debug', nargs='*', help='add console log handler to each debugging logger',
                          dest='debug')

        # set debug colors
        self.add_argument('--color', help='turn on color debugging', action='store_true', dest='color')

        # set log file
        self.add_argument('--log-file', help='append log output to this file', dest='log_file', default=None)

        # set command
        self.add_argument(help='specify operation command', type=str, dest='command', choices=commands)

        # table or identity
        self.add_argument(help='table of tabulate or identity of check', type=str, dest='target', nargs='?',
                          default=None)

    def error(self, message):
        """
        This function turns usage errors into configuration errors.

        :param message: argparse message
        :return: None
        """

        raise ConfigInvalid(message)

    def parse_args(self, *args, **kwargs):
        """
        This function parses the arguments and stores them.

        :return: self
        """

        self.arg_object = ArgumentParser.parse_args(self, *args, **kwargs)

        self._debug('   - args: %r', self.arg_object)

        # return self
        return self

    def update(self):
        """
        This function converts the argument object into a validated configuration.

        :return: CliConfig
        """

        # read argument object
        obj = self.arg_object

        return CliConfig(
            command=obj.command,
            target=obj.target,
            hbar=obj.hbar,
            mass=obj.mass,
            omega=obj.omega,
            l_max=obj.l_max,
            grid_extent=obj.grid_extent,
            grid_points=obj.grid_points,
            quad_order=obj.quad_order,
            tolerance_scale=obj.tolerance_scale,
            tolerances=dict(parse_tolerance(text) for text in obj.tolerances),
            norm_mode=obj.norm_mode,
            kernel_sign=obj.kernel_sign,
            prefactor_mode=obj.prefactor_mode,
            seed=obj.seed,
            output_format=obj.output_format,
            out=obj.out,
            state=parse_state(obj.state),
            x=parse_point(obj.x),
            t=obj.t,
        )
