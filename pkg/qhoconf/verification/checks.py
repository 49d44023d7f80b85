# pylint: disable=invalid-name, unused-argument

"""
Checks Module
-------------

This module binds every verification to a command line identity name. Each function ending in
_identity takes the command line configuration and returns a list of check reports; the registry at
the bottom collects them in definition order, which is the order of a full run.
"""

from collections import OrderedDict
import math

import numpy as np

from qhoconf import settings
from qhoconf.debugging import ModuleLogger
from qhoconf.physics.bargmann import TABLE1, table1_ladder_check, table1_commutator_check, \
    table1_schrodinger_check, sb_transform_check, conjugate_transform_check, prefactor_ratio_check
from qhoconf.physics.conformal import forward_map, conjugate_map, inverse_map, inverse_conjugate_map, \
    sample_points, map_energy, coordinate_independence_check, cr_residual, operator_identity_check, \
    concise_schrodinger_check, energy_derivative_check, free_field_reduction_check, time_replacement_check
from qhoconf.physics.eigenfunctions import time_phase, schrodinger_residual, time_derivative_check, \
    orthonormality_check, hermite_orthogonality_check, norm_discrepancy_check
from qhoconf.physics.ladder import number_operator_check, commutator_check, rep_agreement_check, \
    adjointness_check
from qhoconf.physics.states import StateLabel, states_up_to
from qhoconf.verification.report import CheckReport


# enabling logging
ModuleLogger()


# total degree bounds of the state sweeps
RESIDUAL_N_MAX = 4
LADDER_N_MAX = 6
TABLE1_N_MAX = 6

# sample counts
ROUNDTRIP_POINTS = 10000
INDEPENDENCE_POINTS = 100
OPERATOR_FUNCTIONS = 20

# cauchy-riemann step in units of hbar / E
CR_STEP = 1e-2


def tolerance(config, key):
    """
    This function returns the tolerance of a check, honouring command line overrides.

    :param config: CliConfig
    :param key: tolerance key of settings.TOLERANCES
    :return: tolerance
    """

    return (getattr(config, 'tolerances', None) or {}).get(key, settings.TOLERANCES[key])


def _states(config, n_max):
    """
    This function returns the requested state or every state up to a total degree.

    :param config: CliConfig
    :param n_max: largest total degree
    :return: list of StateLabel
    """

    if getattr(config, 'state', None) is not None:
        return [config.state]

    return states_up_to(n_max)


def aggregate(name, anchor, reports):
    """
    This function folds per-case reports into one report carrying the worst case.

    :param name: check name
    :param anchor: equation reference
    :param reports: list of CheckReport
    :return: CheckReport
    """

    active = [report for report in reports if not report.skipped]
    if not active:
        return CheckReport.skip(name, anchor, reports[0].details.get('reason', 'nothing to check'))

    worst = active[0]
    for report in active[1:]:
        if math.isnan(report.measured) or report.measured > worst.measured:
            worst = report
        if math.isnan(worst.measured):
            break

    return CheckReport(name, anchor, worst.measured, worst.tolerance, OrderedDict([
        ('cases', len(active)),
        ('skipped', len(reports) - len(active)),
        ('worst_case', worst.name),
        ('measured', OrderedDict((report.name, report.measured) for report in active)),
    ]))


def roundtrip_identity(config):
    """
    This function maps seeded random events (or the --x/--t event) forward and back through both
    maps.

    :param config: CliConfig
    :return: list of CheckReport
    """

    params = config.params
    energy = map_energy(config.state or StateLabel(), params)

    if config.x is not None:
        x = np.array([config.x], dtype=float)
        t = np.array([config.t if config.t is not None else 0.0])
    else:
        x, t = sample_points(ROUNDTRIP_POINTS, params, config.seed)

    z, s = forward_map(x, t, energy, params)
    z_star, s_star = conjugate_map(x, t, energy, params)
    back_x, back_t = inverse_map(z, s, energy, params)
    conj_x, conj_t = inverse_conjugate_map(z_star, s_star, energy, params)

    scale = max(float(np.max(np.abs(x))), float(np.max(np.abs(t))), np.finfo(float).tiny)
    measured = max(
        float(np.max(np.abs(back_x - x))), float(np.max(np.abs(back_t - t))),
        float(np.max(np.abs(conj_x - x))), float(np.max(np.abs(conj_t - t))),
    ) / scale

    details = OrderedDict([
        ('points', int(t.shape[0])),
        ('energy', energy),
        ('seed', config.seed),
        ('isometry', bool(np.array_equal(np.abs(z), np.abs(x)))),
        ('conjugate_matches', bool(np.array_equal(s_star, np.conj(s)))),
    ])

    if not params.bound:
        details['s_equals_t'] = bool(np.array_equal(np.real(s), t) and not np.any(np.imag(s)))
        if not details['s_equals_t']:
            measured = float('inf')

    if config.x is not None:
        details.update([('x', x[0]), ('t', t[0]), ('z', z[0]), ('s', s[0]), ('s_star', s_star[0])])

    return [CheckReport('roundtrip', 'Eqs. (1)-(4)', measured, tolerance(config, 'roundtrip'), details)]


def independence_identity(config):
    """
    This function checks that z and s are independent coordinates.

    :param config: CliConfig
    :return: list of CheckReport
    """

    params = config.params
    x, t = sample_points(INDEPENDENCE_POINTS, params, config.seed)

    return [coordinate_independence_check(
        params, map_energy(config.state or StateLabel(), params), x, t, tolerance(config, 'independence'),
    )]


def _cr_grid(energy, params):
    """
    This function returns one phase period in t and u = x^2 up to four squared oscillator lengths.

    :param energy: float
    :param params: OscillatorParams
    :return: t values, u values, step
    """

    length = 1.0 / params.kappa if params.bound else 1.0
    t_values = np.linspace(0.0, 2.0 * math.pi * params.hbar / energy, settings.RESIDUAL_GRID_POINTS)
    u_values = np.linspace(0.0, 4.0 * length ** 2, settings.RESIDUAL_GRID_POINTS)

    return t_values, u_values, CR_STEP * params.hbar / energy


def cr_tau_identity(config):
    """
    This function checks that tau(s) = exp(-i E s / hbar) satisfies the Cauchy-Riemann equations with
    second order convergence.

    :param config: CliConfig
    :return: list of CheckReport
    """

    params = config.params
    energy = map_energy(config.state or StateLabel(), params)
    t_values, u_values, step = _cr_grid(energy, params)

    report = cr_residual(
        lambda s: time_phase(energy, s, params), energy, params, t_values, u_values, step,
        tolerance(config, 'cr_holomorphic'), 'cr-tau',
    )

    order = report.details['convergence_order']
    order_report = CheckReport('cr-tau order', 'Eqs. (9)-(10)', abs(order - 2.0),
                               tolerance(config, 'cr_order'),
                               OrderedDict([('convergence_order', order), ('expected_order', 2.0)]))

    return [report, order_report]


def cr_conjugate_identity(config):
    """
    This function checks that the anti-holomorphic tau(s) = conj(s) violates the Cauchy-Riemann
    equations by at least 1 everywhere.

    :param config: CliConfig
    :return: list of CheckReport
    """

    params = config.params
    energy = map_energy(config.state or StateLabel(), params)
    t_values, u_values, step = _cr_grid(energy, params)

    report = cr_residual(np.conj, energy, params, t_values, u_values, step, name='cr-conjugate')
    minimum = report.details['standard_residual_min']

    details = OrderedDict(report.details)
    details['required_minimum'] = 1.0

    return [CheckReport('cr-conjugate', 'Eqs. (9)-(10)', max(0.0, 1.0 - minimum), tolerance(config, 'exact'),
                        details)]


def eq11_identity(config):
    """
    This function evaluates the Schrodinger residual of every state up to n = 4 on both paths.

    :param config: CliConfig
    :return: list of CheckReport
    """

    params = config.params
    states = _states(config, RESIDUAL_N_MAX)

    return [
        aggregate('eq11 %s' % path, 'Eq. (11)', [
            schrodinger_residual(state, params, config.norm_mode, path,
                                 tolerance=tolerance(config, 'schrodinger_%s' % path))
            for state in states
        ])
        for path in ('analytic', 'finite_difference')
    ]


def eq12_identity(config):
    """
    This function checks i hbar dpsi/dt = E psi for every state up to n = 4.

    :param config: CliConfig
    :return: list of CheckReport
    """

    params = config.params

    return [aggregate('eq12', 'Eq. (12)', [
        time_derivative_check(state, params, config.norm_mode, tolerance=tolerance(config, 'time_derivative'))
        for state in _states(config, RESIDUAL_N_MAX)
    ])]


def eq17_identity(config):
    """
    This function checks the operator relationship between the complex and real coordinate forms.

    :param config: CliConfig
    :return: list of CheckReport
    """

    params = config.params

    return [operator_identity_check(
        params, config.seed, OPERATOR_FUNCTIONS, energy=map_energy(config.state or StateLabel(), params),
        tolerance=tolerance(config, 'operator_identity'),
    )]


def eq18_identity(config):
    """
    This function checks the concise Schrodinger form for every state up to n = 4.

    :param config: CliConfig
    :return: list of CheckReport
    """

    params = config.params

    return [aggregate('eq18', 'Eq. (18)', [
        concise_schrodinger_check(state, params, config.norm_mode,
                                  tolerance=tolerance(config, 'concise_schrodinger'))
        for state in _states(config, RESIDUAL_N_MAX)
    ])]


def eq19_identity(config):
    """
    This function checks i hbar dpsi/ds = E psi for every state up to n = 4.

    :param config: CliConfig
    :return: list of CheckReport
    """

    params = config.params

    return [aggregate('eq19', 'Eq. (19)', [
        energy_derivative_check(state, params, config.norm_mode,
                                tolerance=tolerance(config, 'energy_derivative'))
        for state in _states(config, RESIDUAL_N_MAX)
    ])]


def orthonormality_identity(config):
    """
    This function checks the gram matrix of phi_0 .. phi_lmax and hermite orthogonality.

    :param config: CliConfig
    :return: list of CheckReport
    """

    return [
        orthonormality_check(config.params, config.l_max, config.norm_mode, config.quad_order,
                             tolerance(config, 'orthonormality')),
        hermite_orthogonality_check(12, config.quad_order, tolerance(config, 'hermite_orthogonality')),
    ]


def number_identity(config):
    """
    This function checks the number operator eigenvalue of every state up to n = 6.

    :param config: CliConfig
    :return: list of CheckReport
    """

    params = config.params

    return [aggregate('number', 'Eq. (24)', [
        number_operator_check(state, params, norm_mode=config.norm_mode,
                              tolerance=tolerance(config, 'number_operator'))
        for state in _states(config, LADDER_N_MAX)
    ])]


def commutator_identity(config):
    """
    This function checks [a_i, a_j+] = delta_ij.

    :param config: CliConfig
    :return: list of CheckReport
    """

    return [commutator_check(config.params, norm_mode=config.norm_mode,
                             tolerance=tolerance(config, 'commutator'))]


def ladder_reps_identity(config):
    """
    This function checks that real and conformal ladder operators agree on mapped points.

    :param config: CliConfig
    :return: list of CheckReport
    """

    return [rep_agreement_check(config.params, seed=config.seed, norm_mode=config.norm_mode,
                                tolerance=tolerance(config, 'ladder_reps'))]


def adjoint_identity(config):
    """
    This function checks that raising and lowering are adjoint.

    :param config: CliConfig
    :return: list of CheckReport
    """

    return [adjointness_check(config.params, 8, config.quad_order, config.norm_mode,
                              tolerance(config, 'adjointness'))]


def sb_identity(config):
    """
    This function compares the Segal-Bargmann quadrature with the closed form.

    :param config: CliConfig
    :return: list of CheckReport
    """

    order = max(config.quad_order, 8 + settings.SB_EXTRA_ORDER)

    return [sb_transform_check(8, settings.SB_SAMPLES, config.kernel_sign, order,
                               tolerance(config, 'sb_transform'))]


def conjugate_identity(config):
    """
    This function compares the conjugate transform with the closed form in the configured prefactor
    mode and reports its ratio to the other mode.

    :param config: CliConfig
    :return: list of CheckReport
    """

    return [
        conjugate_transform_check(8, settings.CONJUGATE_SAMPLES,
                                  tolerance=tolerance(config, 'conjugate_transform'),
                                  prefactor_mode=config.prefactor_mode),
        prefactor_ratio_check(8, settings.CONJUGATE_SAMPLES, tolerance(config, 'prefactor_ratio'),
                              config.prefactor_mode),
    ]


def table1_identity(config):
    """
    This function runs the exact ladder, commutator and eigenvalue checks in every complex space.

    :param config: CliConfig
    :return: list of CheckReport
    """

    reports = []
    for space in TABLE1:
        cases = []
        for l in range(TABLE1_N_MAX + 1):
            cases.append(table1_ladder_check(space, l, 'lower'))
            cases.append(table1_ladder_check(space, l, 'raise'))
            cases.append(table1_commutator_check(space, l))

        for state in _states(config, TABLE1_N_MAX):
            cases.append(table1_schrodinger_check(space, state))

        reports.append(aggregate('table1 %s' % space, 'Table 1, Eq. (24)', cases))

    return reports


def free_field_identity(config):
    """
    This function checks the omega = 0 reduction.

    :param config: CliConfig
    :return: list of CheckReport
    """

    return [free_field_reduction_check(config.params, seed=config.seed,
                                       tolerance=tolerance(config, 'free_field'))]


def replacement_identity(config):
    """
    This function checks that the imaginary time replacement regenerates the eigenfunctions.

    :param config: CliConfig
    :return: list of CheckReport
    """

    pairs = [time_replacement_check(state, config.params, config.norm_mode)
             for state in _states(config, RESIDUAL_N_MAX)]

    return [
        aggregate('replacement', 'Eqs. (20)-(21)', [pair[0] for pair in pairs]),
        aggregate('replacement eq11', 'Eq. (11)', [pair[1] for pair in pairs]),
    ]


def norm_identity(config):
    """
    This function reports the ratio of the paper_norm and unit_norm modes.

    :param config: CliConfig
    :return: list of CheckReport
    """

    return [norm_discrepancy_check(config.params, config.l_max, tolerance=tolerance(config, 'norm_ratio'))]


# collect all identities
IDENTITIES = OrderedDict()

# loop through all global objects
for name, reference in list(globals().items()):
    # check if object is an identity
    if name.endswith('_identity') and not name.startswith('_') and callable(reference):
        IDENTITIES[name[:-len('_identity')].replace('_', '-')] = reference

# equation anchor of each identity, used when an identity breaks down before reporting
ANCHORS = {
    'roundtrip': 'Eqs. (1)-(4)',
    'independence': 'Eq. (5 block)',
    'cr-tau': 'Eqs. (9)-(10)',
    'cr-conjugate': 'Eqs. (9)-(10)',
    'eq11': 'Eq. (11)',
    'eq12': 'Eq. (12)',
    'eq17': 'Eqs. (16)-(17), operator relationship',
    'eq18': 'Eq. (18)',
    'eq19': 'Eq. (19)',
    'orthonormality': 'Eq. (14)',
    'number': 'Eq. (24)',
    'commutator': 'Eqs. (22)-(23)',
    'ladder-reps': 'Eqs. (22)-(27)',
    'adjoint': 'Eqs. (22)-(23)',
    'sb': 'Eq. (34), Table 1',
    'conjugate': 'Eq. (35), Table 1',
    'table1': 'Table 1, Eq. (24)',
    'free-field': 'Eqs. (1), (18) at omega = 0',
    'replacement': 'Eqs. (20)-(21)',
    'norm': 'Eq. (14), k_l',
}
