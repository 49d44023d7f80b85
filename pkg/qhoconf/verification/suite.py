# pylint: disable=broad-except

"""
Suite Module
------------

This module runs registered identities and collects their reports. A failing identity never stops a
run; numerical breakdowns are reported as failures, programming errors propagate.
"""

from qhoconf.debugging import ModuleLogger, qhoconf_debug
from qhoconf.define import UnknownIdentity, QuadratureOrderTooLow, StencilOutOfDomain, DegreeTooLarge, \
    OffManifold, ZeroEnergy, DomainError, OrderOutOfRange
from qhoconf.verification.checks import IDENTITIES, ANCHORS
from qhoconf.verification.report import CheckReport, SuiteReport


# enabling logging
ModuleLogger()

# errors that mark a check as failed instead of aborting the run
NUMERIC_ERRORS = (QuadratureOrderTooLow, StencilOutOfDomain, DegreeTooLarge, OffManifold, ZeroEnergy,
                  DomainError, OrderOutOfRange)


def _snapshot(config):
    """
    This function returns the configuration fields that determine a run.

    :param config: CliConfig
    :return: OrderedDict
    """

    snapshot = getattr(config, 'snapshot', None)

    return snapshot() if callable(snapshot) else {}


@qhoconf_debug
def evaluate(config, name):
    """
    This function runs one identity and scales its tolerances.

    :param config: CliConfig
    :param name: identity name
    :return: list of CheckReport
    """

    evaluate._debug('evaluating %s', name)

    try:
        reports = IDENTITIES[name](config)
    except NUMERIC_ERRORS as error:
        evaluate._warning('identity %s broke down: %s', name, error)
        details = {'error': '%s: %s' % (type(error).__name__, error)}
        reports = [CheckReport(name, ANCHORS.get(name, ''), float('inf'), 0.0, details)]

    scale = getattr(config, 'tolerance_scale', 1.0)

    return [report.scaled(scale) for report in reports]


def run_identity(config, name):
    """
    This function runs a single identity by its command line name.

    :param config: CliConfig
    :param name: identity name
    :return: SuiteReport
    """

    if name not in IDENTITIES:
        raise UnknownIdentity('unknown identity %r, choose from: %s' % (name, ', '.join(IDENTITIES)))

    suite = SuiteReport(config=_snapshot(config))
    for report in evaluate(config, name):
        suite.add(report)

    return suite


@qhoconf_debug
def run_suite(config):
    """
    This function runs every registered identity in registration order.

    :param config: CliConfig
    :return: SuiteReport
    """

    suite = SuiteReport(config=_snapshot(config))

    for name in IDENTITIES:
        for report in evaluate(config, name):
            suite.add(report)

    run_suite._info('suite finished: %r', dict(suite.summary))

    return suite
