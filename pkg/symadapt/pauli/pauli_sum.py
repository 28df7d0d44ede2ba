# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
import numbers

import numpy
from scipy.linalg import hadamard

from symadapt.errors import CapacityError, DimensionError
from symadapt.pauli.word import PauliWord
from symadapt.util import (
    DEFAULT_DENSE_LIMIT, DEFAULT_THRESHOLD, MAX_QUBITS, basis_indices,
    sign_of)

#: X/Y/Z-basis phase indexed by the number of Y factors modulo 4.
XYZ_PHASES = numpy.array([1, -1j, -1, 1j])

#: Upper bound on the number of word pairs formed at once by
#: :func:`sum_multiply`.
PRODUCT_CHUNK = 1 << 22


class PauliSum(object):
    """ A finite weighted sum of Pauli words.

    Instances are immutable. The terms are stored as three parallel
    arrays sorted in the canonical ``(z_mask, x_mask)`` order, without
    duplicates and without coefficients below the pruning threshold used
    to build them.

    Attributes
    ----------
    n_qubits : int
        The number of qubits.

    x : numpy.ndarray
        The X masks of the words (``uint64``).

    z : numpy.ndarray
        The Z masks of the words (``uint64``).

    coeffs : numpy.ndarray
        The complex coefficients in the X^a Z^b encoding.

    """

    def __init__(self, n_qubits, x=(), z=(), coeffs=(),
                 threshold=DEFAULT_THRESHOLD):
        n_qubits = int(n_qubits)
        if not 0 < n_qubits <= MAX_QUBITS:
            raise DimensionError(
                'n_qubits must be in 1..{0}, got {1}'.format(
                    MAX_QUBITS, n_qubits))
        x = numpy.asarray(x, dtype=numpy.uint64).ravel()
        z = numpy.asarray(z, dtype=numpy.uint64).ravel()
        coeffs = numpy.asarray(coeffs, dtype=complex).ravel()
        if not len(x) == len(z) == len(coeffs):
            raise ValueError('x, z and coeffs must have equal lengths')
        if len(x) > 0 and (
                int(numpy.max(x | z)) >> n_qubits) != 0:
            raise DimensionError(
                'masks do not fit in {0} qubits'.format(n_qubits))
        self.n_qubits = n_qubits
        self.x, self.z, self.coeffs = _combine(
            n_qubits, x, z, coeffs, threshold)
        for array in (self.x, self.z, self.coeffs):
            array.flags.writeable = False

    # Constructors ##########################################################

    @classmethod
    def zero(cls, n_qubits):
        return cls(n_qubits)

    @classmethod
    def identity(cls, n_qubits, coefficient=1.0):
        return cls(n_qubits, [0], [0], [coefficient])

    @classmethod
    def from_terms(cls, n_qubits, terms, threshold=DEFAULT_THRESHOLD):
        """ Create a sum from ``(PauliWord, coefficient)`` pairs.

        Arguments
        ---------
        terms : dict or iterable
            A mapping or a sequence of pairs. Repeated words are merged.

        """
        if hasattr(terms, 'items'):
            terms = terms.items()
        terms = list(terms)
        for word, _ in terms:
            if word.n_qubits != n_qubits:
                raise DimensionError(
                    'word on {0} qubits in a {1}-qubit sum'.format(
                        word.n_qubits, n_qubits))
        x = [word.x_mask for word, _ in terms]
        z = [word.z_mask for word, _ in terms]
        coeffs = [coefficient for _, coefficient in terms]
        return cls(n_qubits, x, z, coeffs, threshold=threshold)

    @classmethod
    def from_labels(cls, n_qubits, terms, threshold=DEFAULT_THRESHOLD):
        """ Create a sum from ``(label, coefficient)`` pairs.

        The labels use the X/Y/Z basis (``'X0 Y3 Z5'``, ``'I'``) and the
        coefficients refer to that basis.

        """
        pairs = []
        for label, coefficient in terms:
            word, phase = PauliWord.from_label(label, n_qubits)
            pairs.append((word, coefficient * phase))
        return cls.from_terms(n_qubits, pairs, threshold=threshold)

    @classmethod
    def from_matrix(cls, matrix, threshold=DEFAULT_THRESHOLD):
        """ Decompose a dense ``2**n x 2**n`` matrix into Pauli words.

        The coefficient of ``X^x Z^z`` is the trace inner product
        ``Tr((X^x Z^z)^dagger M) / 2**n``. For every ``x`` the shifted
        diagonal ``M[b ^ x, b]`` is Walsh-Hadamard transformed over ``b``.

        """
        matrix = numpy.asarray(matrix, dtype=complex)
        dimension = matrix.shape[0]
        n_qubits = dimension.bit_length() - 1
        if matrix.shape != (dimension, dimension) or \
                (1 << n_qubits) != dimension:
            raise DimensionError(
                'expected a 2**n square matrix, got {0}'.format(
                    matrix.shape))
        index = basis_indices(n_qubits).astype(numpy.intp)
        shifted = matrix[index[:, None] ^ index[None, :], index[None, :]]
        coefficients = shifted.dot(hadamard(dimension)) / dimension
        x = numpy.repeat(index, dimension)
        z = numpy.tile(index, dimension)
        return cls(
            n_qubits, x, z, coefficients.ravel(), threshold=threshold)

    # Properties ############################################################

    @property
    def term_count(self):
        return len(self.coeffs)

    @property
    def words(self):
        return [
            PauliWord(self.n_qubits, x, z) for x, z in zip(self.x, self.z)]

    @property
    def terms(self):
        """ Dictionary from :class:`~.PauliWord` to coefficient.

        """
        return dict(zip(self.words, self.coeffs.tolist()))

    def xyz_terms(self):
        """ Return the ``(label, coefficient)`` pairs in the X/Y/Z basis.

        The pairs follow the canonical ``(z_mask, x_mask)`` order.

        """
        phases = XYZ_PHASES[_popcounts(self.x & self.z) % 4]
        return [
            (word.label, coefficient)
            for word, coefficient in zip(
                self.words, (self.coeffs * phases).tolist())]

    def is_hermitian(self, tol=1e-12):
        """ Whether every X/Y/Z-basis coefficient is real within ``tol``.

        """
        if self.term_count == 0:
            return True
        phases = XYZ_PHASES[_popcounts(self.x & self.z) % 4]
        return bool(numpy.all(numpy.abs((self.coeffs * phases).imag) <= tol))

    def hs_norm(self):
        """ The Hilbert-Schmidt norm divided by ``sqrt(2**n)``.

        Pauli words are orthogonal under the trace inner product, so this
        is the root sum of squared coefficient magnitudes.

        """
        return float(numpy.sqrt(numpy.sum(numpy.abs(self.coeffs) ** 2)))

    def adjoint(self):
        """ The Hermitian conjugate.

        ``(X^x Z^z)^dagger = Z^z X^x = (-1)**popcount(x & z) X^x Z^z``.

        """
        signs = sign_of(self.x & self.z)
        return PauliSum(
            self.n_qubits, self.x, self.z, numpy.conj(self.coeffs) * signs,
            threshold=0.0)

    def to_matrix(self, dense_limit=DEFAULT_DENSE_LIMIT):
        return to_matrix(self, dense_limit=dense_limit)

    def __iter__(self):
        return iter(zip(self.words, self.coeffs.tolist()))

    def __len__(self):
        return self.term_count

    def __eq__(self, other):
        if not isinstance(other, PauliSum):
            return NotImplemented
        return (
            self.n_qubits == other.n_qubits and
            numpy.array_equal(self.x, other.x) and
            numpy.array_equal(self.z, other.z) and
            numpy.array_equal(self.coeffs, other.coeffs))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return 'PauliSum(n_qubits={0}, term_count={1})'.format(
            self.n_qubits, self.term_count)

    # Arithmetic ############################################################

    def __add__(self, other):
        if isinstance(other, numbers.Number):
            other = PauliSum.identity(self.n_qubits, other)
        return sum_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, numbers.Number):
            other = PauliSum.identity(self.n_qubits, other)
        return sum_add(self, sum_scale(other, -1.0))

    def __rsub__(self, other):
        return sum_scale(self, -1.0) + other

    def __neg__(self):
        return sum_scale(self, -1.0)

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return sum_scale(self, other)
        return sum_multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return sum_scale(self, other)
        return NotImplemented

    def __truediv__(self, other):
        return sum_scale(self, 1.0 / other)


#------------------------------------------------------------------------------
#  Operations
#------------------------------------------------------------------------------

def simplify(a, threshold=DEFAULT_THRESHOLD):
    """ Merge duplicate words and drop small coefficients.

    Arguments
    ---------
    a : PauliSum
        The sum to simplify.

    threshold : float
        Coefficients with magnitude below this value are dropped.

    Returns
    -------
    result : PauliSum

    """
    if threshold < 0:
        raise ValueError('threshold must be non-negative')
    return PauliSum(a.n_qubits, a.x, a.z, a.coeffs, threshold=threshold)


def sum_add(a, b, threshold=DEFAULT_THRESHOLD):
    _check_dimensions(a, b)
    return PauliSum(
        a.n_qubits,
        numpy.concatenate((a.x, b.x)),
        numpy.concatenate((a.z, b.z)),
        numpy.concatenate((a.coeffs, b.coeffs)),
        threshold=threshold)


def sum_scale(a, c, threshold=DEFAULT_THRESHOLD):
    return PauliSum(a.n_qubits, a.x, a.z, a.coeffs * c, threshold=threshold)


def sum_multiply(a, b, threshold=DEFAULT_THRESHOLD):
    """ Multiply two Pauli sums.

    All word pairs are formed with array broadcasting: the product word
    is the XOR of the masks and the sign is the parity of
    ``a.z & b.x``. Pairs are processed in row chunks of ``a`` and the
    partial sums are merged in a fixed order, so the result does not
    depend on the chunk size.

    Arguments
    ---------
    a, b : PauliSum
        Sums on the same number of qubits.

    threshold : float
        Pruning threshold applied to the final result.

    Returns
    -------
    product : PauliSum

    """
    _check_dimensions(a, b)
    n_qubits = a.n_qubits
    if a.term_count == 0 or b.term_count == 0:
        return PauliSum(n_qubits)
    rows = max(1, PRODUCT_CHUNK // b.term_count)
    xs, zs, cs = [], [], []
    for start in range(0, a.term_count, rows):
        stop = start + rows
        ax = a.x[start:stop, None]
        az = a.z[start:stop, None]
        signs = sign_of(az & b.x[None, :])
        x, z, coeffs = _combine(
            n_qubits,
            (ax ^ b.x[None, :]).ravel(),
            (az ^ b.z[None, :]).ravel(),
            (a.coeffs[start:stop, None] * b.coeffs[None, :] * signs).ravel(),
            0.0)
        xs.append(x)
        zs.append(z)
        cs.append(coeffs)
    return PauliSum(
        n_qubits, numpy.concatenate(xs), numpy.concatenate(zs),
        numpy.concatenate(cs), threshold=threshold)


def commutator(a, b, threshold=DEFAULT_THRESHOLD):
    return sum_add(
        sum_multiply(a, b, threshold=0.0),
        sum_scale(sum_multiply(b, a, threshold=0.0), -1.0, threshold=0.0),
        threshold=threshold)


def term_count(a):
    return a.term_count


def to_matrix(a, dense_limit=DEFAULT_DENSE_LIMIT):
    """ Build the dense ``2**n x 2**n`` matrix of a Pauli sum.

    Raises
    ------
    CapacityError :
        When ``a.n_qubits`` exceeds ``dense_limit``.

    """
    _check_capacity(a.n_qubits, dense_limit)
    index = basis_indices(a.n_qubits)
    matrix = numpy.zeros((len(index), len(index)), dtype=complex)
    columns = index.astype(numpy.intp)
    for x, z, coefficient in zip(a.x, a.z, a.coeffs):
        rows = (index ^ x).astype(numpy.intp)
        matrix[rows, columns] += coefficient * sign_of(index & z)
    return matrix


#------------------------------------------------------------------------------
#  Private functions
#------------------------------------------------------------------------------

def _combine(n_qubits, x, z, coeffs, threshold):
    """ Sort, merge and prune raw term arrays.

    """
    if len(coeffs) == 0:
        return (
            numpy.zeros(0, dtype=numpy.uint64),
            numpy.zeros(0, dtype=numpy.uint64),
            numpy.zeros(0, dtype=complex))
    shift = numpy.uint64(n_qubits)
    keys = (z << shift) | x
    unique, inverse = numpy.unique(keys, return_inverse=True)
    real = numpy.bincount(
        inverse, weights=coeffs.real, minlength=len(unique))
    imag = numpy.bincount(
        inverse, weights=coeffs.imag, minlength=len(unique))
    merged = real + 1j * imag
    keep = (numpy.abs(merged) >= threshold) & (merged != 0)
    unique = unique[keep]
    low = numpy.uint64((1 << n_qubits) - 1)
    return unique & low, unique >> shift, merged[keep]


def _popcounts(values):
    counts = numpy.zeros(len(values), dtype=numpy.int64)
    values = numpy.asarray(values, dtype=numpy.uint64).copy()
    while numpy.any(values):
        counts += (values & numpy.uint64(1)).astype(numpy.int64)
        values >>= numpy.uint64(1)
    return counts


def _check_dimensions(a, b):
    if a.n_qubits != b.n_qubits:
        raise DimensionError(
            'operands act on {0} and {1} qubits'.format(
                a.n_qubits, b.n_qubits))


def _check_capacity(n_qubits, dense_limit):
    if n_qubits > dense_limit:
        raise CapacityError(
            '{0} qubits exceed the dense limit of {1}'.format(
                n_qubits, dense_limit))


__all__ = [
    'PauliSum',
    'simplify',
    'sum_add',
    'sum_scale',
    'sum_multiply',
    'commutator',
    'term_count',
    'to_matrix']
