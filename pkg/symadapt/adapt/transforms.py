# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
""" Symmetry-adapted operators.

Four ways of keeping the eigenstates of a Hamiltonian ``H`` with a chosen
eigenvalue ``a`` of a commuting symmetry operator ``A`` at the bottom of
the spectrum:

- projection: ``P H P`` (or ``H P``) with the Lowdin projector ``P``
  moves every other state to zero;
- shift: ``H + (mu / 2) (A - a)**2`` raises every other state by
  ``(mu / 2) (a_k - a)**2``;
- reflection: ``H - H (A - a)**2 - (A - a)**2 H`` multiplies every other
  energy by ``1 - 2 (a_k - a)**2``;
- sum over states: the explicit ``sum_k E_k |k><k|`` over the target
  sector, for reference.

"""
import enum
import logging
from collections import namedtuple

import numpy

from symadapt.adapt.symmetry import commutator_residual, spin_spec
from symadapt.errors import (
    ContractError, DimensionError, LabelingError, UsageError)
from symadapt.pauli import PauliSum, sum_add, sum_multiply, sum_scale, to_matrix
from symadapt.spectra import simultaneous_eigenbasis
from symadapt.util import (
    COMMUTATOR_TOLERANCE, DEFAULT_DENSE_LIMIT, DEFAULT_MU, DEFAULT_THRESHOLD,
    LABEL_TOLERANCE)

logger = logging.getLogger(__name__)


class AdaptationMethod(enum.Enum):
    lowdin_PHP = 'lowdin_PHP'
    lowdin_HP = 'lowdin_HP'
    shift = 'shift'
    reflection = 'reflection'
    reflection_singlet = 'reflection_singlet'
    sum_over_states = 'sum_over_states'

    @classmethod
    def parse(cls, value):
        """ Accept an enum member, its value or a command line alias.

        """
        if isinstance(value, cls):
            return value
        aliases = {
            'php': 'lowdin_PHP', 'hp': 'lowdin_HP', 'reflect': 'reflection',
            'reflect-singlet': 'reflection_singlet',
            'reflect_singlet': 'reflection_singlet',
            'sos': 'sum_over_states'}
        key = str(value).strip()
        try:
            return cls(aliases.get(key.lower(), key))
        except ValueError:
            raise UsageError('unsupported method {0!r}'.format(value))


class AdaptedOperator(namedtuple(
        'AdaptedOperator', ['method', 'result', 'provenance'])):
    """ A symmetry-adapted qubit operator.

    Attributes
    ----------
    method : AdaptationMethod
        How the operator was built.

    result : PauliSum
        The adapted operator.

    provenance : dict
        The settings that produced it (symmetry kind, target, ``mu`` and
        pruning threshold).

    """

    @property
    def term_count(self):
        return self.result.term_count


#------------------------------------------------------------------------------
#  Projectors
#------------------------------------------------------------------------------

def lowdin_projector(spec, threshold=DEFAULT_THRESHOLD):
    """ ``P = prod_{j != i} (A - a_j) / (a_i - a_j)``.

    The factors are multiplied nearest eigenvalue first, each product
    simplified at ``threshold``.

    """
    return _projector(spec, spec.others, threshold)


def truncated_projector(spec, threshold=DEFAULT_THRESHOLD):
    """ The single factor of the eigenvalue nearest to the target.

    The result is not idempotent; it only serves to show that a truncated
    product is no longer a projector.

    """
    return _projector(spec, spec.others[:1], threshold)


def _projector(spec, others, threshold):
    a = spec.operator
    projector = PauliSum.identity(a.n_qubits)
    for value in others:
        factor = sum_scale(
            a - value, 1.0 / (spec.target - value), threshold=0.0)
        projector = sum_multiply(projector, factor, threshold=threshold)
    logger.debug(
        'projector on %s = %g: %d factors, %d terms',
        spec.kind.value, spec.target, len(others), projector.term_count)
    return projector


#------------------------------------------------------------------------------
#  Adapted operators
#------------------------------------------------------------------------------

def project_hamiltonian(h, spec, form='PHP', threshold=DEFAULT_THRESHOLD,
                        tolerance=COMMUTATOR_TOLERANCE):
    """ Restrict ``h`` to the target sector by projection.

    Arguments
    ---------
    h : PauliSum
        The Hamiltonian.

    spec : SymmetrySpec
        The symmetry and its target value.

    form : str
        ``'PHP'`` for ``P H P``, ``'HP'`` for ``H P``. The latter equals the
        former only when ``h`` commutes with the symmetry, which is checked.

    Returns
    -------
    adapted : AdaptedOperator

    Raises
    ------
    ContractError :
        When ``form`` is ``'HP'`` and the commutator check fails.

    """
    _check_dimensions(h, spec.operator)
    form = str(form).upper()
    if form not in ('PHP', 'HP'):
        raise UsageError('unsupported projection form {0!r}'.format(form))
    projector = lowdin_projector(spec, threshold=threshold)
    if form == 'HP':
        _check_commutes(h, spec.operator, tolerance)
        result = sum_multiply(h, projector, threshold=threshold)
        if not result.is_hermitian(tol=tolerance):
            raise ContractError('H P is not Hermitian')
        method = AdaptationMethod.lowdin_HP
    else:
        result = sum_multiply(
            sum_multiply(projector, h, threshold=threshold), projector,
            threshold=threshold)
        method = AdaptationMethod.lowdin_PHP
    return _adapted(method, result, spec, threshold)


def shift_operator(h, spec, mu=DEFAULT_MU, threshold=DEFAULT_THRESHOLD):
    """ ``L = H + (mu / 2) (A - a)**2``.

    Raises
    ------
    ContractError :
        When ``mu`` is not positive.

    """
    _check_dimensions(h, spec.operator)
    if not mu > 0:
        raise ContractError('mu must be positive, got {0}'.format(mu))
    deviation = spec.operator - spec.target
    penalty = sum_multiply(deviation, deviation, threshold=0.0)
    result = sum_add(h, sum_scale(penalty, 0.5 * mu, threshold=0.0),
                     threshold=threshold)
    return _adapted(AdaptationMethod.shift, result, spec, threshold, mu=mu)


def reflect_operator(h, spec, threshold=DEFAULT_THRESHOLD,
                     tolerance=COMMUTATOR_TOLERANCE,
                     dense_limit=DEFAULT_DENSE_LIMIT):
    """ ``H - H (A - a)**2 - (A - a)**2 H``.

    A warning is logged for every non-target level with a positive energy
    (when ``h`` is small enough to diagonalize), since reflection moves
    those down instead of up.

    Raises
    ------
    ContractError :
        When ``h`` does not commute with the symmetry.

    """
    _check_dimensions(h, spec.operator)
    _check_commutes(h, spec.operator, tolerance)
    _warn_positive_levels(h, spec, dense_limit)
    deviation = spec.operator - spec.target
    square = sum_multiply(deviation, deviation, threshold=0.0)
    result = _reflect(h, square, threshold)
    return _adapted(AdaptationMethod.reflection, result, spec, threshold)


def reflect_singlet(h, s2, threshold=DEFAULT_THRESHOLD,
                    tolerance=COMMUTATOR_TOLERANCE,
                    dense_limit=DEFAULT_DENSE_LIMIT):
    """ ``H - H S**2 - S**2 H``.

    Singlets keep their energy; a level with spin ``S`` and energy ``E``
    moves to ``-E (2 S (S + 1) - 1)``.

    """
    _check_dimensions(h, s2)
    _check_commutes(h, s2, tolerance)
    spec = spin_spec(s2, h.n_qubits, 0.0)
    _warn_positive_levels(h, spec, dense_limit)
    result = _reflect(h, s2, threshold)
    return _adapted(
        AdaptationMethod.reflection_singlet, result, spec, threshold)


def sum_over_states(h, spec, dense_limit=DEFAULT_DENSE_LIMIT,
                    threshold=DEFAULT_THRESHOLD, tolerance=LABEL_TOLERANCE):
    """ ``sum_k E_k |k><k|`` over the target-sector eigenstates of ``h``.

    Raises
    ------
    CapacityError :
        Above ``dense_limit`` qubits.

    LabelingError :
        When an eigenvector carries a symmetry expectation that is not
        within ``tolerance`` of any eigenvalue of the symmetry.

    """
    _check_dimensions(h, spec.operator)
    h_matrix = to_matrix(h, dense_limit=dense_limit)
    a_matrix = to_matrix(spec.operator, dense_limit=dense_limit)
    energies, vectors, _ = simultaneous_eigenbasis(
        h_matrix, [a_matrix], label_tolerance=tolerance)
    values = numpy.real(numpy.einsum(
        'ik,ij,jk->k', vectors.conj(), a_matrix, vectors))
    eigenvalues = numpy.array(spec.eigenvalues)
    distance = numpy.abs(values[:, None] - eigenvalues[None, :]).min(axis=1)
    if numpy.any(distance > tolerance):
        raise LabelingError(
            '{0} eigenvectors mix symmetry sectors'.format(
                int(numpy.sum(distance > tolerance))))
    selected = numpy.abs(values - spec.target) <= tolerance
    sector = vectors[:, selected]
    matrix = (sector * energies[selected]).dot(sector.conj().T)
    result = PauliSum.from_matrix(matrix, threshold=threshold)
    logger.info(
        'sum over %d states: %d terms', int(selected.sum()),
        result.term_count)
    return _adapted(
        AdaptationMethod.sum_over_states, result, spec, threshold)


def positive_non_target_levels(h, spec, dense_limit=DEFAULT_DENSE_LIMIT,
                               tolerance=LABEL_TOLERANCE):
    """ ``(energy, symmetry value)`` of every non-target level above zero.

    Levels within ``tolerance`` of zero, such as the empty state of an
    operator without constant term, are not reported.

    """
    h_matrix = to_matrix(h, dense_limit=dense_limit)
    a_matrix = to_matrix(spec.operator, dense_limit=dense_limit)
    energies, vectors, _ = simultaneous_eigenbasis(
        h_matrix, [a_matrix], label_tolerance=tolerance)
    values = numpy.real(numpy.einsum(
        'ik,ij,jk->k', vectors.conj(), a_matrix, vectors))
    return [
        (float(energy), float(value))
        for energy, value in zip(energies, values)
        if energy > tolerance and abs(value - spec.target) > tolerance]


#------------------------------------------------------------------------------
#  Private functions
#------------------------------------------------------------------------------

def _reflect(h, square, threshold):
    left = sum_multiply(h, square, threshold=0.0)
    right = sum_multiply(square, h, threshold=0.0)
    return sum_add(
        h, sum_scale(sum_add(left, right, threshold=0.0), -1.0, threshold=0.0),
        threshold=threshold)


def _adapted(method, result, spec, threshold, mu=None):
    provenance = {
        'method': method.value,
        'symmetry': spec.kind.value,
        'target': spec.target,
        'mu': mu,
        'threshold': threshold}
    logger.info(
        '%s (%s = %g): %d terms', method.value, spec.kind.value, spec.target,
        result.term_count)
    return AdaptedOperator(method, result, provenance)


def _check_dimensions(h, a):
    if h.n_qubits != a.n_qubits:
        raise DimensionError(
            'Hamiltonian on {0} qubits, symmetry on {1}'.format(
                h.n_qubits, a.n_qubits))


def _check_commutes(h, a, tolerance):
    residual = commutator_residual(h, a)
    if residual > tolerance:
        raise ContractError(
            'operators do not commute, residual norm {0:.3e}'.format(
                residual))


def _warn_positive_levels(h, spec, dense_limit):
    if h.n_qubits > dense_limit:
        return
    positive = positive_non_target_levels(h, spec, dense_limit=dense_limit)
    for energy, value in positive:
        logger.warning(
            'non-target level %.7f (%s = %g) is positive and moves down on '
            'reflection', energy, spec.kind.value, value)
