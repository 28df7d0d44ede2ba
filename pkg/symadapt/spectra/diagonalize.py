# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
import logging

import numpy
from scipy.linalg import eigh

from symadapt.errors import ContractError
from symadapt.pauli import to_matrix
from symadapt.util import (
    DEFAULT_DENSE_LIMIT, DEGENERACY_THRESHOLD, LABEL_TOLERANCE)

logger = logging.getLogger(__name__)

RESIDUAL_TOLERANCE = 1e-9


def diagonalize(a, dense_limit=DEFAULT_DENSE_LIMIT):
    """ Full eigendecomposition of a Hermitian qubit operator.

    Arguments
    ---------
    a : PauliSum
        The operator.

    dense_limit : int
        Largest qubit count accepted.

    Returns
    -------
    eigenvalues : numpy.ndarray
        Real eigenvalues in ascending order.

    eigenvectors : numpy.ndarray
        Orthonormal eigenvectors as columns.

    Raises
    ------
    ContractError :
        When ``a`` is not Hermitian.

    CapacityError :
        When ``a`` acts on more than ``dense_limit`` qubits.

    """
    if not a.is_hermitian(tol=1e-10):
        raise ContractError('cannot diagonalize a non-Hermitian operator')
    matrix = to_matrix(a, dense_limit=dense_limit)
    eigenvalues, eigenvectors = eigh(matrix)
    residual = numpy.linalg.norm(
        matrix.dot(eigenvectors) - eigenvectors * eigenvalues)
    if residual > RESIDUAL_TOLERANCE:
        logger.warning('eigendecomposition residual %.3e', residual)
    return eigenvalues, eigenvectors


def degeneracy_groups(values, threshold=DEGENERACY_THRESHOLD):
    """ Group ids of ascending values, a new group at every gap that is not
    smaller than ``threshold``.

    """
    values = numpy.asarray(values)
    if len(values) == 0:
        return numpy.zeros(0, dtype=int)
    steps = numpy.diff(values) >= threshold
    return numpy.concatenate(([0], numpy.cumsum(steps))).astype(int)


def simultaneous_eigenbasis(h_matrix, a_matrices=(),
                            threshold=DEGENERACY_THRESHOLD,
                            label_tolerance=LABEL_TOLERANCE):
    """ Eigenbasis of ``h_matrix`` that also diagonalizes commuting matrices.

    Inside every degenerate group of ``h_matrix`` the eigenvectors are
    rotated to diagonalize the first of ``a_matrices``, then inside each
    of its eigenspaces the second one, and so on.

    Arguments
    ---------
    h_matrix : numpy.ndarray
        Hermitian matrix.

    a_matrices : sequence
        Hermitian matrices commuting with ``h_matrix`` and with each other.

    Returns
    -------
    energies : numpy.ndarray
        Ascending eigenvalues of ``h_matrix``.

    vectors : numpy.ndarray
        The rotated eigenvectors as columns.

    groups : numpy.ndarray
        Degeneracy group id of every column.

    """
    energies, vectors = eigh(h_matrix)
    groups = degeneracy_groups(energies, threshold)
    vectors = vectors.astype(complex)
    for group in numpy.unique(groups):
        columns = numpy.nonzero(groups == group)[0]
        if len(columns) > 1:
            vectors[:, columns] = _refine(
                vectors[:, columns], list(a_matrices), label_tolerance)
    return energies, vectors, groups


def _refine(vectors, matrices, label_tolerance):
    if not matrices or vectors.shape[1] == 1:
        return vectors
    head, rest = matrices[0], matrices[1:]
    restricted = vectors.conj().T.dot(head).dot(vectors)
    values, rotation = eigh(0.5 * (restricted + restricted.conj().T))
    vectors = vectors.dot(rotation)
    labels = degeneracy_groups(values, label_tolerance)
    for label in numpy.unique(labels):
        columns = numpy.nonzero(labels == label)[0]
        vectors[:, columns] = _refine(
            vectors[:, columns], rest, label_tolerance)
    return vectors
