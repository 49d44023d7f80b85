# pylint: disable=

"""
System Tests
------------

This module runs the command line through the verification system with in-memory streams.
"""

import io
import json

import pytest

from qhoconf.system import VerificationSystem, EXIT_PASSED, EXIT_FAILED, EXIT_INVALID


def run(*argv):
    """
    This function runs one command line without exiting.

    :param argv: command line arguments
    :return: system, stdout text, stderr text
    """

    stdout, stderr = io.StringIO(), io.StringIO()
    system = VerificationSystem(list(argv), stdout=stdout, stderr=stderr, exit=False)

    return system, stdout.getvalue(), stderr.getvalue()


def test_check_roundtrip_event():
    system, stdout, stderr = run('check', 'roundtrip', '--x', '1,2,3', '--t', '0.5')

    assert system.exit_code == EXIT_PASSED
    assert stdout.startswith('PASSED')
    assert '    s_star:' in stdout
    assert stdout.endswith('1 checks: 1 passed, 0 failed, 0 skipped\n')
    assert not stderr


def test_check_json():
    system, stdout, _ = run('check', 'conjugate', '--format', 'json')

    assert system.exit_code == EXIT_PASSED
    document = json.loads(stdout)
    assert document['summary']['total'] == 2
    assert [check['name'] for check in document['checks']] == ['conjugate', 'prefactor-ratio']


def test_check_failure_exit_code():
    system, _, _ = run('check', 'sb', '--tolerance', 'sb_transform=0')
    assert system.exit_code == EXIT_FAILED
    assert system.result.failures == 1


@pytest.mark.parametrize('argv', [
    ('check', 'eq99'),
    ('check',),
    ('verify', 'roundtrip'),
    ('tabulate', 'nothing'),
    ('tabulate', 'phi', '--omega', '0'),
    ('explode',),
    ('check', 'sb', '--norm-mode', 'bogus'),
    ('check', 'sb', '--lmax', '999'),
    ('check', 'sb', '--omega', '-1'),
    ('check', 'sb', '--state', '1,0'),
    ('check', 'sb', '--x', '1,2'),
    ('check', 'sb', '--tolerance', 'bogus=1'),
    ('check', 'sb', '--tolerance', 'sb_transform'),
    ('check', 'number', '--tolerance', 'ladder_real=1e-3'),
])
def test_invalid_invocations(argv):
    system, stdout, stderr = run(*argv)

    assert system.exit_code == EXIT_INVALID
    assert stderr.startswith('error: ')
    assert not stdout


def test_unknown_identity_lists_choices():
    _, _, stderr = run('check', 'eq99')
    assert 'roundtrip' in stderr


def test_tabulate_phi():
    system, stdout, _ = run('tabulate', 'phi', '--lmax', '3')
    lines = stdout.splitlines()

    assert system.exit_code == EXIT_PASSED
    assert lines[0] == 'x,phi_0,phi_1,phi_2,phi_3'
    assert len(lines) == 122
    assert all(len(line.split(',')) == 5 for line in lines)
    assert lines[1].split(',')[0] == '-6.0'


def test_out_file(tmp_path):
    path = tmp_path / 'report.json'
    system, stdout, _ = run('check', 'norm', '--format', 'json', '--out', str(path))

    assert system.exit_code == EXIT_PASSED
    assert not stdout
    assert json.loads(path.read_text())['checks'][0]['name'] == 'norm'

    # the destination does not change the report
    _, again, _ = run('check', 'norm', '--format', 'json')
    assert again == path.read_text()


def test_out_file_unwritable(tmp_path):
    system, _, stderr = run('check', 'norm', '--out', str(tmp_path / 'missing' / 'report.txt'))

    assert system.exit_code == EXIT_INVALID
    assert 'cannot write' in stderr


def test_tabulate_out_file(tmp_path):
    path = tmp_path / 'theta.csv'
    system, stdout, _ = run('tabulate', 'theta', '--lmax', '1', '--grid-points', '11', '--out', str(path))

    assert system.exit_code == EXIT_PASSED
    assert not stdout
    assert len(path.read_text().splitlines()) == 12


def test_buggers():
    system, stdout, _ = run('buggers')
    lines = stdout.splitlines()

    assert system.exit_code == EXIT_PASSED
    assert lines[0].split() == ['Name', 'Description']
    assert set(lines[1]) == {'-'}
    assert any(line.startswith('qhoconf.verification.suite') for line in lines)


def test_exit_calls_sys_exit():
    with pytest.raises(SystemExit) as error:
        VerificationSystem(['check', 'eq99'], stdout=io.StringIO(), stderr=io.StringIO())
    assert error.value.code == EXIT_INVALID


def test_tabulate_failure_leaves_no_file(tmp_path):
    path = tmp_path / 'phi.csv'
    system, stdout, stderr = run('tabulate', 'phi', '--omega', '0', '--out', str(path))

    assert system.exit_code == EXIT_INVALID
    assert stderr.startswith('error: ')
    assert not stdout
    assert not path.exists()


def test_quad_order_bound():
    system, _, stderr = run('check', 'sb', '--quad-order', '246')
    assert system.exit_code == EXIT_PASSED, stderr

    for order in ('247', '256'):
        system, stdout, stderr = run('check', 'sb', '--quad-order', order)
        assert system.exit_code == EXIT_INVALID
        assert 'quad-order' in stderr
        assert not stdout


def test_verify_default_is_reproducible():
    system, first, _ = run('verify', '--format', 'json')
    _, second, _ = run('verify', '--format', 'json')

    assert system.exit_code == EXIT_PASSED
    assert first == second

    document = json.loads(first)
    assert document['summary']['failed'] == 0
    assert [check['name'] for check in document['checks']][0] == 'roundtrip'


def test_verify_free_field():
    system, stdout, _ = run('verify', '--omega', '0', '--format', 'json')
    document = json.loads(stdout)

    assert system.exit_code == EXIT_PASSED
    assert document['summary']['failed'] == 0
    assert document['summary']['skipped'] > 0
    assert all(check['status'] != 'failed' for check in document['checks'])


def test_verify_zero_tolerance_scale():
    system, stdout, _ = run('verify', '--tolerance-scale', '0', '--format', 'json')

    assert system.exit_code == EXIT_FAILED
    assert json.loads(stdout)['summary']['failed'] > 0
