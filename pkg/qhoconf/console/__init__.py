# pylint: disable=

"""
Console Package
---------------

This package contains the output helpers of the command line.
"""

from qhoconf.console.tabulate import TABLES, write_table


def print_values(values, stream):
    """
    This function prints rows as aligned columns with a line under the header.

    :param values: list of argument tuples, header first
    :param stream: text stream
    :return: None
    """

    # get maximum lengths
    widths = [max(len(str(row[j])) for row in values) for j in range(len(values[0]))]

    # loop through values
    for i, row in enumerate(values):
        stream.write(' '.join(str(item).ljust(width) for item, width in zip(row, widths)).rstrip() + '\n')

        # add line under header
        if i == 0:
            stream.write('%s\n' % ((sum(widths) + len(widths) - 1) * '-'))

    stream.flush()


__all__ = ['TABLES', 'print_values', 'write_table']
