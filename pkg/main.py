#!/usr/bin/env python
# pylint: disable=invalid-name

"""
Main Module
-----------

This module runs the verification system from the command line.

Note: This Module only works as described, if executed directly! (no import)
"""

from qhoconf import VerificationSystem


if __name__ == '__main__':
    system = VerificationSystem()
