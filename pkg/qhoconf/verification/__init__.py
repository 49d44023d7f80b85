# pylint: disable=

"""
Verification Package
--------------------

This package reports the outcome of the verifications. The identity registry lives in
qhoconf.verification.checks and the runner in qhoconf.verification.suite.
"""

from qhoconf.verification.report import CheckReport, SuiteReport, clean_value, STATUS_PASSED, \
    STATUS_FAILED, STATUS_SKIPPED

__all__ = ['CheckReport', 'SuiteReport', 'clean_value', 'STATUS_PASSED', 'STATUS_FAILED', 'STATUS_SKIPPED']
