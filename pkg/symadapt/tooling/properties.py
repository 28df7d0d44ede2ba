# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
""" Randomized property checks and the published-value acceptance checks.

"""
import logging
from collections import namedtuple

import numpy
from scipy.linalg import eigvalsh

from symadapt.adapt import (
    commutator_residual, lowdin_projector, number_spec, truncated_projector)
from symadapt.fermion import FermionOperator, build_number_operator
from symadapt.mapping import MappingKind, map_operator, verify_isospectral
from symadapt.pauli import (
    PauliSum, StateVector, expectation, sum_multiply, to_matrix, variance)
from symadapt.tooling import reference
from symadapt.tooling.pipeline import adapt, make_spec, term_count_grid
from symadapt.spectra import label_spectrum
from symadapt.util import MATCH_TOLERANCE

logger = logging.getLogger(__name__)

PAULI_TOLERANCE = 1e-10
ISOSPECTRAL_TOLERANCE = 1e-8
IDEMPOTENCY_TOLERANCE = 1e-8
VARIANCE_TOLERANCE = 1e-10
FIXTURE_COMMUTATOR_TOLERANCE = 1e-10
TRUNCATION_GAP = 1e-6
V_NN_TOLERANCE = 5e-7
ZERO_TOLERANCE = 1e-8


class CheckResult(namedtuple('CheckResult', ['name', 'passed', 'detail'])):
    """ Outcome of one named check.

    Attributes
    ----------
    name : str
        The check.

    passed : bool
        Whether it succeeded.

    detail : str
        Observed value against the expectation.

    """


def bounded(name, worst, tolerance):
    return CheckResult(
        name, bool(worst < tolerance),
        'worst {0:.3e}, tolerance {1:.0e}'.format(worst, tolerance))


def exceeding(name, least, bound):
    return CheckResult(
        name, bool(least > bound),
        'least {0:.3e}, must exceed {1:.0e}'.format(least, bound))


def equal(name, expected, observed):
    return CheckResult(
        name, bool(expected == observed),
        'expected {0}, observed {1}'.format(expected, observed))


#------------------------------------------------------------------------------
#  Random instances
#------------------------------------------------------------------------------

def random_pauli_sum(n_qubits, n_terms, rng, hermitian=False):
    """ A sum of ``n_terms`` random words with Gaussian coefficients.

    """
    size = 1 << n_qubits
    x = rng.integers(0, size, n_terms)
    z = rng.integers(0, size, n_terms)
    coeffs = rng.normal(size=n_terms) + 1j * rng.normal(size=n_terms)
    a = PauliSum(n_qubits, x, z, coeffs, threshold=0.0)
    if hermitian:
        a = 0.5 * (a + a.adjoint())
    return a


def random_fermion_operator(n_modes, n_terms, rng):
    """ A random Hermitian operator of one- and two-body strings.

    """
    terms = []
    for _ in range(n_terms):
        length = 2 if rng.random() < 0.5 else 4
        modes = rng.integers(0, n_modes, length)
        string = tuple(
            (int(mode), index < length // 2)
            for index, mode in enumerate(modes))
        terms.append((string, complex(rng.normal(), rng.normal())))
    op = FermionOperator(n_modes, terms)
    return 0.5 * (op + op.adjoint())


#------------------------------------------------------------------------------
#  Property suite
#------------------------------------------------------------------------------

def property_suite(trials=200, seed=0):
    """ Run the fixture-independent properties on random instances.

    Returns
    -------
    results : list
        One :class:`~.CheckResult` per property.

    """
    rng = numpy.random.default_rng(seed)
    checks = (
        check_pauli_algebra, check_isospectral, check_idempotency,
        check_variance_identity)
    results = []
    for check in checks:
        results.extend(check(trials, rng))
    return results


def check_pauli_algebra(trials, rng):
    associativity = 0.0
    homomorphism = 0.0
    for _ in range(trials):
        n = int(rng.integers(1, 7))
        a, b, c = [random_pauli_sum(n, 5, rng) for _ in range(3)]
        left = to_matrix(sum_multiply(sum_multiply(a, b, 0.0), c, 0.0))
        right = to_matrix(sum_multiply(a, sum_multiply(b, c, 0.0), 0.0))
        associativity = max(associativity, numpy.abs(left - right).max())
        product = to_matrix(sum_multiply(a, b, 0.0))
        expected = to_matrix(a).dot(to_matrix(b))
        homomorphism = max(homomorphism, numpy.abs(product - expected).max())
    return [
        bounded('pauli associativity', associativity, PAULI_TOLERANCE),
        bounded('pauli matrix homomorphism', homomorphism, PAULI_TOLERANCE)]


def check_isospectral(trials, rng):
    worst = 0.0
    for _ in range(trials):
        op = random_fermion_operator(4, 6, rng)
        report = verify_isospectral(op, list(MappingKind), threshold=0.0)
        worst = max(worst, report.max_deviation)
    return [bounded('mapping isospectrality', worst, ISOSPECTRAL_TOLERANCE)]


def check_idempotency(trials, rng):
    worst = 0.0
    kinds = list(MappingKind)
    for _ in range(trials):
        n = int(rng.integers(1, 7))
        kind = kinds[int(rng.integers(0, len(kinds)))]
        number = map_operator(build_number_operator(n), kind)
        spec = number_spec(number, n, int(rng.integers(0, n + 1)))
        matrix = to_matrix(lowdin_projector(spec))
        worst = max(worst, numpy.linalg.norm(
            matrix.dot(matrix) - matrix, 2))
    return [bounded('projector idempotency', worst, IDEMPOTENCY_TOLERANCE)]


def check_variance_identity(trials, rng):
    """ ``<L> - <H> = (mu / 2) (Var(A) + (<A> - a)**2)`` for any state.

    """
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(1, 7))
        h = random_pauli_sum(n, 8, rng, hermitian=True)
        number = map_operator(build_number_operator(n), 'jordan_wigner')
        target = int(rng.integers(0, n + 1))
        mu = float(rng.uniform(1.0, 20.0))
        deviation = number - target
        shifted = h + 0.5 * mu * sum_multiply(deviation, deviation, 0.0)
        psi = StateVector.random(n, rng)
        mean = expectation(number, psi)
        residual = (
            expectation(shifted, psi) - expectation(h, psi) -
            0.5 * mu * variance(number, psi) -
            0.5 * mu * (mean - target) ** 2)
        worst = max(worst, abs(residual))
    return [bounded('shift variance identity', worst, VARIANCE_TOLERANCE)]


#------------------------------------------------------------------------------
#  Checks on a built molecule
#------------------------------------------------------------------------------

def fixture_checks(built, config):
    """ Commutators, projector identities and the truncated projector.

    """
    results = [
        bounded(
            '[H, N] residual',
            commutator_residual(built.hamiltonian, built.number),
            FIXTURE_COMMUTATOR_TOLERANCE),
        bounded(
            '[H, S^2] residual',
            commutator_residual(built.hamiltonian, built.s2),
            FIXTURE_COMMUTATOR_TOLERANCE)]
    spec = make_spec(built, 'number')
    truncated = to_matrix(
        truncated_projector(spec), dense_limit=config.dense_limit)
    results.append(exceeding(
        'truncated projector is not idempotent',
        numpy.linalg.norm(truncated.dot(truncated) - truncated, 2),
        TRUNCATION_GAP))
    if built.n_qubits <= config.dense_limit:
        projected = to_matrix(adapt(built, 'php', spec, config).result)
        summed = to_matrix(adapt(built, 'sos', spec, config).result)
        results.append(bounded(
            'sum over states equals P H P',
            numpy.abs(projected - summed).max(), ZERO_TOLERANCE))
    return results


def acceptance_checks(built, config):
    """ Compare a built molecule with its published values.

    Only molecules listed in :mod:`symadapt.tooling.reference` are
    checked; an empty list is returned for any other input.

    """
    fixture = config.fixture_id
    if fixture not in reference.FIXTURE_MAPPINGS:
        logger.info('no reference values for %r', fixture)
        return []
    results = []
    kind = MappingKind.parse(config.mapping).value
    counts = reference.OPERATOR_COUNTS.get((fixture, kind))
    if counts is not None:
        observed = (
            built.hamiltonian.term_count, built.number.term_count,
            built.s2.term_count)
        results.append(equal('operator term counts', counts, observed))
        results.append(equal(
            'adapted term counts',
            reference.ADAPTED_COUNTS[fixture],
            tuple(term_count_grid(built, config))))
    results.append(bounded(
        'nuclear repulsion',
        abs(built.integrals.v_nn - reference.NUCLEAR_REPULSION[fixture]),
        V_NN_TOLERANCE))
    if built.n_qubits > config.dense_limit:
        return results
    spectrum = label_spectrum(
        built.hamiltonian, built.number, built.s2,
        dense_limit=config.dense_limit)
    results.append(equal(
        'number sector sizes', reference.N_SUBSPACE_SIZES[fixture],
        spectrum.counts_by_n(built.n_qubits)))
    results.append(equal(
        'spin sector sizes', reference.S_SUBSPACE_SIZES[fixture],
        spectrum.counts_by_s(built.n_qubits)))
    if fixture == 'lih_sto3g':
        results.extend(spectrum_checks(built, config, spectrum))
    return results


def spectrum_checks(built, config, spectrum):
    """ The published LiH spectra of H and of its N = 2 adaptations.

    """
    results = [bounded(
        'energies', numpy.abs(
            spectrum.energies - numpy.array(reference.LIH_ENERGIES)).max(),
        MATCH_TOLERANCE)]
    observed = sorted(
        spectrum.label(level) for level in range(len(spectrum)))
    results.append(equal(
        'labels', sorted(reference.LIH_LABELS), observed))
    spec = make_spec(built, 'number', 2)
    shift_config = config._replace(mu=reference.SPECTRUM_MU)
    columns = (
        ('shift', 'shift', reference.LIH_SHIFTED),
        ('reflection', 'reflect', reference.LIH_REFLECTED))
    for name, method, published in columns:
        adapted = adapt(built, method, spec, shift_config)
        eigenvalues = eigvalsh(to_matrix(adapted.result))
        results.append(bounded(
            '{0} spectrum'.format(name),
            numpy.abs(eigenvalues - numpy.array(published)).max(),
            MATCH_TOLERANCE))
    projected = eigvalsh(to_matrix(adapt(built, 'php', spec, config).result))
    zeros = numpy.sort(numpy.abs(projected))[:len(projected) - 15]
    results.append(bounded('projected zeros', zeros.max(), ZERO_TOLERANCE))
    return results
