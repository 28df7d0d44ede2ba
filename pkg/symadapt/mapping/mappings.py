# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
import logging
from collections import namedtuple

import numpy
from scipy.linalg import eigvalsh

from symadapt.errors import ContractError
from symadapt.mapping.encodings import MappingKind, ladder_sets
from symadapt.pauli import PauliSum, sum_multiply, to_matrix
from symadapt.util import DEFAULT_DENSE_LIMIT, DEFAULT_THRESHOLD

logger = logging.getLogger(__name__)

#: Number of fermionic terms mapped before the partial sum is merged.
BATCH_SIZE = 256


class IsospectralReport(namedtuple(
        'IsospectralReport', ['kinds', 'spectra', 'max_deviation'])):
    """ Spectra of the images of one operator under several mappings.

    Attributes
    ----------
    kinds : tuple
        The :class:`~.MappingKind` values compared.

    spectra : dict
        Ascending eigenvalues per mapping.

    max_deviation : float
        Largest pairwise eigenvalue difference.

    """

    def isospectral(self, tol=1e-8):
        return self.max_deviation < tol


def ladder_images(kind, n_modes):
    """ Pauli images of all creation and annihilation operators.

    With the update set ``U``, parity set ``P`` and remainder set ``R``
    of mode ``j``, the Majorana operators are ``c = X_U X_j Z_P`` and
    ``d = X_U Y_j Z_R = i X^(U+j) Z^(R+j)``, so that::

        a+_j = (c - i d) / 2 = (X^(U+j) Z^P + X^(U+j) Z^(R+j)) / 2
        a_j  = (c + i d) / 2 = (X^(U+j) Z^P - X^(U+j) Z^(R+j)) / 2

    Returns
    -------
    images : dict
        Mapping from ``(mode, dagger)`` to :class:`~.PauliSum`.

    """
    images = {}
    for sets in ladder_sets(kind, n_modes):
        j = sets.mode
        x = _mask(sets.update) | (1 << j)
        z_parity = _mask(sets.parity)
        z_remainder = _mask(sets.remainder) | (1 << j)
        for dagger, sign in ((True, 0.5), (False, -0.5)):
            images[(j, dagger)] = PauliSum(
                n_modes, [x, x], [z_parity, z_remainder], [0.5, sign],
                threshold=0.0)
    return images


def map_operator(op, kind, threshold=DEFAULT_THRESHOLD):
    """ Map a fermionic operator to a qubit operator.

    Every action is replaced by its Pauli image and the products are
    expanded term by term; partial sums are merged every
    ``BATCH_SIZE`` terms.

    Arguments
    ---------
    op : FermionOperator
        The operator to map.

    kind : MappingKind or str
        The mapping.

    threshold : float
        Pruning threshold of the result.

    Returns
    -------
    image : PauliSum
        An operator on ``op.n_spin_orbitals`` qubits.

    """
    kind = MappingKind.parse(kind)
    n_qubits = op.n_spin_orbitals
    images = ladder_images(kind, n_qubits)
    identity = PauliSum.identity(n_qubits)
    partial = []
    result = PauliSum(n_qubits)
    for string, coefficient in sorted(op.terms.items()):
        product = identity
        for action in string:
            product = sum_multiply(product, images[action], threshold=0.0)
        partial.append((product, coefficient))
        if len(partial) == BATCH_SIZE:
            result = _merge(result, partial)
            partial = []
    result = _merge(result, partial, threshold=threshold)
    logger.info(
        '%s image: %d qubits, %d Pauli terms',
        kind.value, n_qubits, result.term_count)
    return result


def verify_isospectral(op, kinds, dense_limit=DEFAULT_DENSE_LIMIT,
                       threshold=DEFAULT_THRESHOLD):
    """ Compare the spectra of the images of ``op`` under several mappings.

    Arguments
    ---------
    op : FermionOperator
        A Hermitian operator.

    kinds : list
        The mappings to compare.

    Returns
    -------
    report : IsospectralReport

    Raises
    ------
    CapacityError :
        When the mode count exceeds ``dense_limit``.

    ContractError :
        When an image is not Hermitian.

    """
    kinds = tuple(MappingKind.parse(kind) for kind in kinds)
    spectra = {}
    for kind in kinds:
        image = map_operator(op, kind, threshold=threshold)
        if not image.is_hermitian(tol=1e-10):
            raise ContractError(
                'the {0} image is not Hermitian'.format(kind.value))
        spectra[kind] = eigvalsh(to_matrix(image, dense_limit=dense_limit))
    deviation = 0.0
    for first in kinds:
        for second in kinds:
            deviation = max(deviation, float(numpy.max(numpy.abs(
                spectra[first] - spectra[second]))))
    return IsospectralReport(kinds, spectra, deviation)


def _mask(qubits):
    mask = 0
    for qubit in qubits:
        mask |= 1 << qubit
    return mask


def _merge(result, partial, threshold=0.0):
    if not partial:
        return PauliSum(
            result.n_qubits, result.x, result.z, result.coeffs,
            threshold=threshold)
    xs = [result.x] + [product.x for product, _ in partial]
    zs = [result.z] + [product.z for product, _ in partial]
    cs = [result.coeffs] + [
        product.coeffs * coefficient for product, coefficient in partial]
    return PauliSum(
        result.n_qubits, numpy.concatenate(xs), numpy.concatenate(zs),
        numpy.concatenate(cs), threshold=threshold)
