# pylint: disable=

"""
Console Tests
-------------

This module tests the CSV tables and the column printer.
"""

import csv
import io
import math

import pytest

from qhoconf.console import TABLES, print_values, write_table
from qhoconf.define import ConfigInvalid
from qhoconf.physics.states import StateLabel
from qhoconf.system.config import CliConfig


def table(config, what):
    """
    This function writes a table and reads it back.

    :param config: CliConfig
    :param what: table name
    :return: header, rows of floats
    """

    stream = io.StringIO()
    count = write_table(config, what, stream)

    lines = list(csv.reader(io.StringIO(stream.getvalue())))
    rows = [[float(cell) for cell in line] for line in lines[1:]]
    assert len(rows) == count

    return lines[0], rows


def test_registered_tables():
    assert list(TABLES) == ['phi', 'psi_slice', 'theta', 'sb_compare']


def test_unknown_table(config):
    with pytest.raises(ConfigInvalid):
        write_table(config, 'chi', io.StringIO())


def test_phi_table_is_symmetric():
    header, rows = table(CliConfig(l_max=2, grid_points=21), 'phi')

    assert header == ['x', 'phi_0', 'phi_1', 'phi_2']
    assert len(rows) == 21
    for row, mirror in zip(rows, reversed(rows)):
        assert row[0] == pytest.approx(-mirror[0], abs=1e-12)
        assert row[1] == pytest.approx(mirror[1], rel=1e-12)
        assert row[2] == pytest.approx(-mirror[2], rel=1e-12, abs=1e-12)


def test_psi_slice_ground_state():
    header, rows = table(CliConfig(grid_points=11), 'psi_slice')

    assert header == ['x1', 're_psi', 'im_psi', 'abs_psi']
    center = rows[5]
    assert center[0] == pytest.approx(0.0, abs=1e-12)
    assert center[1] == pytest.approx(math.pi ** -0.75, rel=1e-12)
    assert all(row[2] == 0.0 for row in rows)


def test_psi_slice_phase():
    _, rows = table(CliConfig(grid_points=11, state=StateLabel(1, 0, 0), t=0.3), 'psi_slice')

    for x1, real, imag, modulus in rows:
        assert modulus == pytest.approx(math.hypot(real, imag), rel=1e-12, abs=1e-300)
        if x1:
            assert imag != 0.0


def test_theta_table_ground_state_is_constant():
    _, rows = table(CliConfig(l_max=1, grid_points=7), 'theta')

    assert len({row[1] for row in rows}) == 1
    assert rows[0][2] == pytest.approx(-rows[-1][2], rel=1e-12)


def test_sb_compare_table():
    header, rows = table(CliConfig(l_max=2, grid_points=5), 'sb_compare')

    assert header == ['a', 'quadrature_0', 'closed_0', 'difference_0', 'quadrature_1', 'closed_1',
                      'difference_1', 'quadrature_2', 'closed_2', 'difference_2']
    assert [row[0] for row in rows] == [-2.0, -1.0, 0.0, 1.0, 2.0]
    for row in rows:
        assert max(abs(value) for value in row[3::3]) < 1e-8


def test_print_values():
    stream = io.StringIO()
    print_values([('Name', 'Description'), ('qhoconf.console', 'Console Package')], stream)

    lines = stream.getvalue().splitlines()
    assert lines[0] == 'Name            Description'
    assert lines[1] == '-' * 31
    assert lines[2] == 'qhoconf.console Console Package'
