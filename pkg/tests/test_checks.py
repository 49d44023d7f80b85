# pylint: disable=redefined-outer-name

"""
Checks Tests
------------

This module tests the identity registry and the suite runner.
"""

import math

import pytest

from qhoconf.define import UnknownIdentity, OrderOutOfRange, QuadratureOrderTooLow, PREFACTOR_PAPER
from qhoconf.physics.states import StateLabel
from qhoconf.system.config import CliConfig
from qhoconf.verification.checks import IDENTITIES, ANCHORS, tolerance
from qhoconf.verification.suite import evaluate, run_identity, run_suite


IDENTITY_NAMES = [
    'roundtrip', 'independence', 'cr-tau', 'cr-conjugate', 'eq11', 'eq12', 'eq17', 'eq18', 'eq19',
    'orthonormality', 'number', 'commutator', 'ladder-reps', 'adjoint', 'sb', 'conjugate', 'table1',
    'free-field', 'replacement', 'norm',
]


@pytest.fixture
def ground():
    """
    This function returns a configuration restricted to the ground state.

    :return: CliConfig
    """

    return CliConfig(state=StateLabel())


def test_registry_order():
    assert list(IDENTITIES) == IDENTITY_NAMES


def test_tolerance_override():
    assert tolerance(CliConfig(), 'sb_transform') == 1e-8
    assert tolerance(CliConfig(tolerances={'sb_transform': 1e-3}), 'sb_transform') == 1e-3


def test_unknown_identity(config):
    with pytest.raises(UnknownIdentity) as error:
        run_identity(config, 'eq99')
    assert 'roundtrip' in str(error.value)


@pytest.mark.parametrize('name', ['roundtrip', 'independence', 'cr-tau', 'cr-conjugate', 'eq11', 'eq12',
                                  'eq18', 'eq19', 'number', 'replacement'])
def test_identity_passes(ground, name):
    suite = run_identity(ground, name)
    assert suite.checks
    assert suite.failures == 0, suite.to_text(verbose=True)


@pytest.mark.parametrize('name', ['orthonormality', 'sb', 'conjugate', 'adjoint', 'free-field', 'norm'])
def test_state_free_identity_passes(config, name):
    suite = run_identity(config, name)
    assert suite.failures == 0, suite.to_text(verbose=True)


def test_roundtrip_single_event():
    config = CliConfig(x=(1.0, 2.0, 3.0), t=0.5)
    report = run_identity(config, 'roundtrip').checks[0]

    assert report.passed
    assert report.details['points'] == 1
    assert report.details['isometry']
    assert report.details['conjugate_matches']
    assert report.details['x'] == pytest.approx([1.0, 2.0, 3.0])


def test_cr_tau_reports_order(ground):
    reports = run_identity(ground, 'cr-tau').checks
    assert [report.name for report in reports] == ['cr-tau', 'cr-tau order']
    assert reports[1].details['convergence_order'] == pytest.approx(2.0, abs=0.1)


def test_zero_tolerance_scale_fails():
    suite = run_identity(CliConfig(tolerance_scale=0.0), 'sb')
    assert suite.failures == 1
    assert suite.checks[0].tolerance == 0.0


def test_free_field_skips_bound_checks():
    config = CliConfig(omega=0.0, state=StateLabel())

    assert run_identity(config, 'eq11').checks[0].skipped
    assert run_identity(config, 'number').checks[0].skipped

    roundtrip = run_identity(config, 'roundtrip').checks[0]
    assert roundtrip.passed
    assert roundtrip.details['s_equals_t']


def test_deterministic_reports(ground):
    first = run_identity(ground, 'independence').to_json()
    second = run_identity(ground, 'independence').to_json()
    assert first == second


def test_suite_runs_every_identity():
    suite = run_suite(CliConfig(state=StateLabel(1, 0, 0), l_max=4))

    assert suite.failures == 0, suite.to_text(verbose=True)
    assert suite.summary['total'] >= len(IDENTITIES)
    assert suite.config['state'] == [1, 0, 0]
    assert 'out' not in suite.config


def test_number_and_table1_sweep_default_states(config):
    # 84 states with n1 + n2 + n3 <= 6
    number = run_identity(config, 'number')
    assert number.failures == 0, number.to_text(verbose=True)
    assert number.checks[0].details['cases'] == 84

    table1 = run_identity(config, 'table1')
    assert table1.failures == 0, table1.to_text(verbose=True)
    assert len(table1.checks) == 3
    for report in table1.checks:
        assert report.details['cases'] == 7 * 3 + 84


def test_conjugate_identity_honours_prefactor_mode():
    table = run_identity(CliConfig(), 'conjugate').checks
    paper = run_identity(CliConfig(prefactor_mode=PREFACTOR_PAPER), 'conjugate').checks

    assert all(report.passed for report in table + paper)
    assert table[0].details['normalization'] == pytest.approx(1.0, rel=1e-12)
    assert paper[0].details['normalization'] == pytest.approx(math.pi ** -0.25, rel=1e-12)
    assert table[1].details['expected_ratio'] == pytest.approx(math.pi ** 0.25)
    assert paper[1].details['expected_ratio'] == pytest.approx(math.pi ** -0.25)


def test_every_identity_has_an_anchor():
    assert set(ANCHORS) == set(IDENTITIES)
    assert all(ANCHORS.values())


@pytest.mark.parametrize('error', [OrderOutOfRange, QuadratureOrderTooLow])
def test_breakdown_keeps_anchor(monkeypatch, config, error):
    def broken(config):
        raise error('quadrature order must be within 1..256, got 266')

    monkeypatch.setitem(IDENTITIES, 'sb', broken)
    report, = evaluate(config, 'sb')

    assert not report.passed
    assert report.equation_anchor == 'Eq. (34), Table 1'
    assert report.details['error'].startswith(error.__name__)
