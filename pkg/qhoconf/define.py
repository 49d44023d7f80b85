# pylint: disable=too-few-public-methods

"""
Conformal Oscillator Define Module
----------------------------------

This module contains the user facing definitions: errors and the mode names shared by all packages.
"""

# normalization modes
UNIT_NORM = 'unit_norm'
PAPER_NORM = 'paper_norm'
NORM_MODES = (UNIT_NORM, PAPER_NORM)

# segal-bargmann kernel cross term signs
KERNEL_PLUS = 'plus'
KERNEL_MINUS = 'minus'
KERNEL_SIGNS = (KERNEL_PLUS, KERNEL_MINUS)

# prefactor modes of the conjugate transform
PREFACTOR_TABLE = 'table'
PREFACTOR_PAPER = 'paper'
PREFACTOR_MODES = (PREFACTOR_TABLE, PREFACTOR_PAPER)

# ladder directions
LOWER = 'lower'
RAISE = 'raise'
DIRECTIONS = (LOWER, RAISE)

# ladder representations
REP_REAL = 'real_x'
REP_CONFORMAL = 'conformal_zeta'
REP_BARGMANN = 'bargmann_a'
REP_CONJUGATE = 'conjugate_b'
REP_STATE = 'state_label'
LADDER_REPS = (REP_REAL, REP_CONFORMAL, REP_BARGMANN, REP_CONJUGATE, REP_STATE)

# table 1 spaces
SPACE_BARGMANN = 'bargmann'
SPACE_CONJUGATE = 'conjugate'
SPACE_CONFORMAL = 'conformal'
SPACES = (SPACE_BARGMANN, SPACE_CONJUGATE, SPACE_CONFORMAL)

# derivative operator kinds
D_DS = 'd_ds'
D_DS_STAR = 'd_ds_star'
D_DZ = 'd_dz'
D_DZ_STAR = 'd_dz_star'
D_DZETA = 'd_dzeta'
D_DZETA_STAR = 'd_dzeta_star'
OPERATOR_KINDS = (D_DS, D_DS_STAR, D_DZ, D_DZ_STAR, D_DZETA, D_DZETA_STAR)

# chain rule form (time derivative kept) and energy form (i hbar d/dt replaced by E)
FORM_CHAIN = 'chain'
FORM_ENERGY = 'energy'
OPERATOR_FORMS = (FORM_CHAIN, FORM_ENERGY)

# quadrature families
GAUSS_HERMITE = 'gauss_hermite'
GAUSS_LAGUERRE = 'gauss_laguerre'
QUADRATURE_FAMILIES = (GAUSS_HERMITE, GAUSS_LAGUERRE)

# output formats
FORMATS = ('text', 'json')


class QhoconfError(Exception):
    """
    This class is the base of all errors raised by the library.
    """

    pass


class DegreeTooLarge(QhoconfError, ValueError):
    """
    This class signals a hermite degree beyond the configured guard.
    """

    pass


class ZeroEnergy(QhoconfError, ZeroDivisionError):
    """
    This class signals a conformal map requested with vanishing energy.
    """

    pass


class OffManifold(QhoconfError, ValueError):
    """
    This class signals complex coordinates that are not the image of real coordinates.
    """

    pass


class StencilOutOfDomain(QhoconfError, ValueError):
    """
    This class signals a finite difference stencil leaving the domain of a field.
    """

    pass


class OrderOutOfRange(QhoconfError, ValueError):
    """
    This class signals an unsupported quadrature order.
    """

    pass


class QuadratureOrderTooLow(QhoconfError, ArithmeticError):
    """
    This class signals a quadrature that did not converge at the requested order.
    """

    pass


class DomainError(QhoconfError, ValueError):
    """
    This class signals an argument outside the domain of an integral transform.
    """

    pass


class ConfigInvalid(QhoconfError, ValueError):
    """
    This class signals an invalid command line configuration.
    """

    pass


class UnknownIdentity(QhoconfError, KeyError):
    """
    This class signals a check name that is not registered.
    """

    def __str__(self):
        return str(self.args[0]) if self.args else ''


class OutputError(QhoconfError, OSError):
    """
    This class signals an unwritable output path.
    """

    pass
