# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
import logging

import numpy

from symadapt.errors import ContractError, LabelingError
from symadapt.pauli import commutator, to_matrix
from symadapt.spectra.diagonalize import simultaneous_eigenbasis
from symadapt.util import (
    COMMUTATOR_TOLERANCE, DEFAULT_DENSE_LIMIT, DEGENERACY_THRESHOLD,
    LABEL_TOLERANCE, spin_from_s2)

logger = logging.getLogger(__name__)


class LabeledSpectrum(object):
    """ Energy levels with their particle number and total spin labels.

    Attributes
    ----------
    energies : numpy.ndarray
        Ascending energies in hartree.

    n_values : numpy.ndarray
        Raw expectation values of the number operator.

    s2_values : numpy.ndarray
        Raw expectation values of the total spin squared.

    groups : numpy.ndarray
        Degeneracy group id of every level.

    vectors : numpy.ndarray
        The labeled eigenvectors as columns.

    """

    def __init__(self, energies, n_values, s2_values, groups, vectors=None):
        self.energies = numpy.asarray(energies, dtype=float)
        self.n_values = numpy.asarray(n_values, dtype=float)
        self.s2_values = numpy.asarray(s2_values, dtype=float)
        self.groups = numpy.asarray(groups, dtype=int)
        self.vectors = vectors

    def __len__(self):
        return len(self.energies)

    @property
    def s_values(self):
        return numpy.array([spin_from_s2(value) for value in self.s2_values])

    @property
    def n_labels(self):
        return numpy.rint(self.n_values).astype(int)

    @property
    def s_labels(self):
        """ Total spin rounded to the nearest half-integer.

        """
        return numpy.rint(2.0 * self.s_values) / 2.0

    def label(self, level):
        return (int(self.n_labels[level]), float(self.s_labels[level]))

    def counts_by_n(self, n_spin_orbitals):
        """ Number of levels for each particle number ``0..n_spin_orbitals``.

        """
        return tuple(
            int(count) for count in numpy.bincount(
                self.n_labels, minlength=n_spin_orbitals + 1))

    def counts_by_s(self, n_spin_orbitals):
        """ Number of levels for each total spin ``0, 1/2, ...,
        n_spin_orbitals / 4``.

        """
        doubled = numpy.rint(2.0 * self.s_values).astype(int)
        return tuple(
            int(count) for count in numpy.bincount(
                doubled, minlength=n_spin_orbitals // 2 + 1))


def label_spectrum(h, n_op, s2_op, dense_limit=DEFAULT_DENSE_LIMIT,
                   threshold=DEGENERACY_THRESHOLD,
                   tolerance=LABEL_TOLERANCE):
    """ Diagonalize ``h`` and attach ``(N, S)`` labels to every level.

    Degenerate levels are resolved by simultaneous diagonalization with
    the number operator first and the total spin second, so the labels do
    not depend on the eigensolver's choice of basis.

    Arguments
    ---------
    h, n_op, s2_op : PauliSum
        Pairwise commuting Hermitian operators on the same qubits.

    Returns
    -------
    spectrum : LabeledSpectrum

    Raises
    ------
    ContractError :
        When the operators do not commute within tolerance.

    LabelingError :
        When a label is not within ``tolerance`` of an integer particle
        number or a half-integer spin.

    """
    for first, second, name in (
            (h, n_op, 'H and N'), (h, s2_op, 'H and S^2'),
            (n_op, s2_op, 'N and S^2')):
        residual = commutator(first, second, threshold=0.0).hs_norm()
        if residual > COMMUTATOR_TOLERANCE:
            raise ContractError(
                '{0} do not commute, residual {1:.3e}'.format(name, residual))
    h_matrix = to_matrix(h, dense_limit=dense_limit)
    n_matrix = to_matrix(n_op, dense_limit=dense_limit)
    s2_matrix = to_matrix(s2_op, dense_limit=dense_limit)
    energies, vectors, groups = simultaneous_eigenbasis(
        h_matrix, [n_matrix, s2_matrix], threshold=threshold,
        label_tolerance=tolerance)
    n_values = _expectations(n_matrix, vectors)
    s2_values = _expectations(s2_matrix, vectors)
    spectrum = LabeledSpectrum(energies, n_values, s2_values, groups, vectors)
    offenders = []
    for level, (n_value, s_value) in enumerate(
            zip(spectrum.n_values, spectrum.s_values)):
        if abs(n_value - round(n_value)) > tolerance or \
                abs(2.0 * s_value - round(2.0 * s_value)) > 2.0 * tolerance:
            offenders.append((level, n_value, s_value))
    if offenders:
        raise LabelingError(
            '{0} levels carry unresolved labels, first at level {1}'.format(
                len(offenders), offenders[0][0]))
    logger.info(
        'labeled %d levels in %d degeneracy groups',
        len(spectrum), len(numpy.unique(groups)))
    return spectrum


def _expectations(matrix, vectors):
    return numpy.real(numpy.einsum(
        'ik,ij,jk->k', vectors.conj(), matrix, vectors))
