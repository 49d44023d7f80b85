# pylint: disable=invalid-name

"""
Tabulate Module
---------------

This module writes plot data as CSV: one header row, one row per grid point, numbers in shortest
round-trip form with a dot decimal separator.
"""

from collections import OrderedDict
import csv

import numpy as np

from qhoconf import settings
from qhoconf.debugging import ModuleLogger, qhoconf_debug
from qhoconf.define import ConfigInvalid
from qhoconf.physics.bargmann import TRANSFORM_L_MAX, sb_transform, sb_closed_form
from qhoconf.physics.eigenfunctions import phi, theta, psi_real
from qhoconf.physics.states import StateLabel


# enabling logging
ModuleLogger()


def _cell(value):
    """
    This function renders one number.

    :param value: float
    :return: text
    """

    return repr(float(value))


def _xi_grid(config):
    """
    This function returns the symmetric grid of --grid-extent and --grid-points.

    :param config: CliConfig
    :return: xi values
    """

    return np.linspace(-config.grid_extent, config.grid_extent, config.grid_points)


def _length_grid(config):
    """
    This function returns the grid in length units; it needs a confining oscillator.

    :param config: CliConfig
    :return: x values
    """

    params = config.params
    if not params.bound:
        raise ConfigInvalid('this table is sampled in xi units and requires omega > 0')

    return _xi_grid(config) / params.kappa


def phi_table(config):
    """
    This function tabulates phi_0 .. phi_lmax.

    :param config: CliConfig
    :return: header, rows
    """

    x = _length_grid(config)
    columns = [phi(l, x, config.params, config.norm_mode) for l in range(config.l_max + 1)]

    header = ['x'] + ['phi_%i' % l for l in range(config.l_max + 1)]

    return header, np.column_stack([x] + columns)


def psi_slice_table(config):
    """
    This function tabulates psi along the first axis through the origin at time --t.

    :param config: CliConfig
    :return: header, rows
    """

    x1 = _length_grid(config)
    state = config.state or StateLabel()
    points = np.column_stack([x1, np.zeros_like(x1), np.zeros_like(x1)])
    t = 0.0 if config.t is None else config.t

    value = psi_real(state, points, np.full(x1.shape, t), config.params, config.norm_mode)

    return ['x1', 're_psi', 'im_psi', 'abs_psi'], np.column_stack([x1, value.real, value.imag, np.abs(value)])


def theta_table(config):
    """
    This function tabulates theta_0 .. theta_lmax over real z.

    :param config: CliConfig
    :return: header, rows
    """

    z = _length_grid(config)
    columns = [theta(l, z, config.params, config.norm_mode) for l in range(config.l_max + 1)]

    header = ['z'] + ['theta_%i' % l for l in range(config.l_max + 1)]

    return header, np.column_stack([z] + columns)


def sb_compare_table(config):
    """
    This function tabulates the segal-bargmann quadrature next to its closed form.

    :param config: CliConfig
    :return: header, rows
    """

    l_max = min(config.l_max, TRANSFORM_L_MAX)
    a_values = np.linspace(-settings.SB_EXTENT, settings.SB_EXTENT, config.grid_points)

    header = ['a']
    columns = [a_values]
    for l in range(l_max + 1):
        quadrature = np.array([sb_transform(l, a, kernel_sign=config.kernel_sign) for a in a_values])
        closed = np.array([sb_closed_form(l, a, config.kernel_sign) for a in a_values])
        header += ['quadrature_%i' % l, 'closed_%i' % l, 'difference_%i' % l]
        columns += [quadrature, closed, quadrature - closed]

    return header, np.column_stack(columns)


# collect all tables
TABLES = OrderedDict()

# loop through all global objects
for name, reference in list(globals().items()):
    # check if object is a table
    if name.endswith('_table') and callable(reference):
        TABLES[name[:-len('_table')]] = reference


@qhoconf_debug
def write_table(config, what, stream):
    """
    This function writes one table as CSV.

    :param config: CliConfig
    :param what: table name
    :param stream: text stream
    :return: number of data rows
    """

    if what not in TABLES:
        raise ConfigInvalid('unknown table %r, choose from: %s' % (what, ', '.join(TABLES)))

    header, rows = TABLES[what](config)
    write_table._debug('table %s: %i rows, %i columns', what, rows.shape[0], rows.shape[1])

    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(value) for value in row])

    return rows.shape[0]
