# pylint: disable=

"""
Physics Package
---------------

This package contains the oscillator: states, hermite polynomials, eigenfunctions, the conformal
coordinates, ladder operators and the complex integral transforms.
"""
