# pylint: disable=too-many-instance-attributes, too-many-arguments

"""
Report Module
-------------

This module contains the uniform result type of every verification and its aggregation and
serialization.
"""

from collections import OrderedDict
from dataclasses import dataclass, field
import io
import json
import math

import numpy as np

from qhoconf.debugging import ModuleLogger, DebugContents


# enabling logging
ModuleLogger()


STATUS_PASSED = 'passed'
STATUS_FAILED = 'failed'
STATUS_SKIPPED = 'skipped'


def clean_value(value):
    """
    This function converts a detail value into plain JSON data with a stable representation.

    :param value: any detail value
    :return: JSON compatible value
    """

    if isinstance(value, (bool, str)) or value is None:
        return value

    if isinstance(value, (int, np.integer)):
        return int(value)

    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return 'nan'
        if math.isinf(value):
            return 'inf' if value > 0 else '-inf'
        return value

    if isinstance(value, (complex, np.complexfloating)):
        return [clean_value(value.real), clean_value(value.imag)]

    if isinstance(value, dict):
        return OrderedDict((str(key), clean_value(item)) for key, item in value.items())

    if isinstance(value, (list, tuple, np.ndarray)):
        return [clean_value(item) for item in value]

    return str(value)


@dataclass
class CheckReport(DebugContents):
    """
    This class describes the outcome of one verification. A check passes exactly when the measured
    value does not exceed the tolerance; skipped checks carry the reason in their details.
    """

    name: str
    equation_anchor: str
    measured: float
    tolerance: float
    details: OrderedDict = field(default_factory=OrderedDict)
    skipped: bool = False

    _debug_contents = ('name', 'equation_anchor', 'measured', 'tolerance', 'passed', 'details')

    def __post_init__(self):
        self.measured = float(self.measured)
        self.tolerance = float(self.tolerance)
        self.details = OrderedDict(self.details)

    @property
    def passed(self):
        """
        This function tells whether the measured value is within tolerance.

        :return: bool
        """

        return not self.skipped and self.measured <= self.tolerance

    @property
    def status(self):
        """
        This function returns 'passed', 'failed' or 'skipped'.

        :return: status text
        """

        if self.skipped:
            return STATUS_SKIPPED

        return STATUS_PASSED if self.passed else STATUS_FAILED

    @classmethod
    def skip(cls, name, equation_anchor, reason):
        """
        This function creates a skipped report.

        :param name: check name
        :param equation_anchor: equation reference
        :param reason: why the check did not run
        :return: CheckReport
        """

        return cls(name, equation_anchor, float('nan'), float('nan'), OrderedDict(reason=reason), True)

    def scaled(self, scale):
        """
        This function returns a copy with the tolerance multiplied by scale.

        :param scale: tolerance scale
        :return: CheckReport
        """

        return CheckReport(
            self.name, self.equation_anchor, self.measured, self.tolerance * scale, self.details,
            self.skipped,
        )

    def as_dict(self):
        """
        This function returns the report in a stable field order.

        :return: OrderedDict
        """

        return OrderedDict([
            ('name', self.name),
            ('equation_anchor', self.equation_anchor),
            ('status', self.status),
            ('measured', clean_value(self.measured)),
            ('tolerance', clean_value(self.tolerance)),
            ('passed', self.passed),
            ('details', clean_value(self.details)),
        ])

    def to_text(self, verbose=False):
        """
        This function renders the report as text.

        :param verbose: include every detail
        :return: text
        """

        line = '%-8s %-28s measured=%-24s tolerance=%-10s %s' % (
            self.status.upper(), self.name, _number(self.measured), _number(self.tolerance),
            self.equation_anchor,
        )

        if not verbose and not self.skipped:
            return line

        lines = [line]
        for key, value in self.details.items():
            lines.append('    %s: %s' % (key, json.dumps(clean_value(value))))

        return '\n'.join(lines)


def _number(value):
    """
    This function renders a number in shortest round-trip form.

    :param value: float
    :return: text
    """

    return str(clean_value(value))


@dataclass
class SuiteReport(object):
    """
    This class collects check reports in registration order together with the configuration that
    produced them.
    """

    checks: list = field(default_factory=list)
    config: OrderedDict = field(default_factory=OrderedDict)

    def add(self, report):
        """
        This function appends a report.

        :param report: CheckReport
        :return: None
        """

        self.checks.append(report)

    @property
    def summary(self):
        """
        This function counts the reports by status.

        :return: OrderedDict of counts
        """

        counts = OrderedDict([('total', len(self.checks)), (STATUS_PASSED, 0), (STATUS_FAILED, 0),
                              (STATUS_SKIPPED, 0)])
        for report in self.checks:
            counts[report.status] += 1

        return counts

    @property
    def failures(self):
        """
        This function returns the number of failed checks.

        :return: count
        """

        return self.summary[STATUS_FAILED]

    def as_dict(self):
        """
        This function returns the suite in a stable field order.

        :return: OrderedDict
        """

        return OrderedDict([
            ('summary', self.summary),
            ('config', clean_value(self.config)),
            ('checks', [report.as_dict() for report in self.checks]),
        ])

    def to_json(self):
        """
        This function serializes the suite as a JSON document.

        :return: JSON text, newline terminated
        """

        return json.dumps(self.as_dict(), indent=2, allow_nan=False) + '\n'

    def to_text(self, verbose=False):
        """
        This function renders the plain text summary table.

        :param verbose: include every detail
        :return: text, newline terminated
        """

        output = io.StringIO()
        for report in self.checks:
            output.write(report.to_text(verbose) + '\n')

        summary = self.summary
        output.write('%i checks: %i passed, %i failed, %i skipped\n' % (
            summary['total'], summary[STATUS_PASSED], summary[STATUS_FAILED], summary[STATUS_SKIPPED],
        ))

        return output.getvalue()
