# pylint: disable=

"""
Conformal Oscillator Verification
---------------------------------

This package checks the conformal time and space formulation of the three dimensional quantum
harmonic oscillator against its standard solution, and tabulates the functions involved.
"""

from qhoconf.debugging import ModuleLogger


# enabling logging
ModuleLogger()


from qhoconf.system import VerificationSystem  # pylint: disable=wrong-import-position
