# pylint: disable=

"""
Conformal Oscillator Settings Module
------------------------------------

This module contains general settings for the verification system.
"""

# natural units
HBAR = 1.0
MASS = 1.0
OMEGA = 1.0

# hermite degree guard
L_MAX_GUARD = 64

# degree bound of the command line tables
L_MAX = 10

# grid in xi units
GRID_EXTENT = 6.0
GRID_POINTS = 121

# coarse grid per axis for three dimensional checks
CHECK_GRID_POINTS = 11

# residual grid per axis
RESIDUAL_GRID_POINTS = 21

# quadrature orders
QUAD_ORDER = 64
QUAD_ORDER_MAX = 256
SB_EXTRA_ORDER = 40
LAGUERRE_EXTRA_ORDER = 20
CONVERGENCE_EXTRA_ORDER = 10

# finite difference stencils
STEP = 1e-3
STEP_FOURTH = 1e-2
RICHARDSON_LEVELS = 1

# manifold tolerance of the inverse maps
MANIFOLD_TOLERANCE = 1e-12

# reference energy of the free-field limit (omega = 0)
FREE_FIELD_ENERGY = 1.0

# modes
NORM_MODE = 'unit_norm'
KERNEL_SIGN = 'plus'
PREFACTOR_MODE = 'table'

# random sample points
SEED = 20240229

# output
OUTPUT_FORMAT = 'text'

# segal-bargmann sample points
SB_SAMPLES = (0.0, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0)
SB_EXTENT = 2.0

# conjugate transform sample points
CONJUGATE_SAMPLES = (1.0, 2.0, 3.0)

# tolerances of the registered checks
TOLERANCES = {
    'orthonormality': 1e-9,
    'hermite_orthogonality': 1e-9,
    'schrodinger_analytic': 1e-7,
    'schrodinger_finite_difference': 1e-5,
    'time_derivative': 1e-8,
    'psi_conformal': 1e-12,
    'norm_ratio': 1e-12,
    'roundtrip': 1e-15,
    'free_field': 1e-6,
    'independence': 1e-10,
    'operator_identity': 1e-6,
    'concise_schrodinger': 1e-6,
    'energy_derivative': 1e-8,
    'cr_holomorphic': 1e-3,
    'cr_order': 0.3,
    'ladder_reps': 1e-10,
    'commutator': 1e-10,
    'number_operator': 1e-10,
    'adjointness': 1e-9,
    'sb_transform': 1e-8,
    'conjugate_transform': 1e-8,
    'prefactor_ratio': 1e-10,
    'exact': 0.0,
}
