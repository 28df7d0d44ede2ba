""" Binary encodings of fermionic occupations on qubits.

Every supported mapping stores ``q = B n (mod 2)`` on the qubits, where
``n`` is the occupation vector and ``B`` a unit lower-triangular binary
matrix:

- Jordan-Wigner: ``B`` is the identity.
- parity: qubit ``i`` holds the parity of modes ``0..i``.
- Bravyi-Kitaev: qubit ``i`` holds the parity of the Fenwick-tree range
  ``(i & (i + 1))..i``.

The update, parity and flip sets of a mode follow from ``B`` and its
inverse, and the ladder operators are built from them.

"""
import enum

import numpy

from symadapt.errors import ContractError, UsageError


class MappingKind(enum.Enum):
    """ The supported fermion-to-qubit mappings.

    """
    jordan_wigner = 'jordan_wigner'
    parity = 'parity'
    bravyi_kitaev = 'bravyi_kitaev'

    @classmethod
    def parse(cls, value):
        """ Accept an enum member, its value or a short alias.

        """
        if isinstance(value, cls):
            return value
        aliases = {'jw': 'jordan_wigner', 'bk': 'bravyi_kitaev'}
        key = str(value).strip().lower().replace('-', '_')
        try:
            return cls(aliases.get(key, key))
        except ValueError:
            raise UsageError('unsupported mapping {0!r}'.format(value))


def encoding_matrix(kind, n_modes):
    """ The binary occupation-to-qubit matrix of a mapping.

    Returns
    -------
    matrix : numpy.ndarray
        ``n_modes x n_modes`` array of 0/1 (``int8``).

    """
    kind = MappingKind.parse(kind)
    rows, columns = numpy.indices((n_modes, n_modes))
    if kind is MappingKind.jordan_wigner:
        matrix = rows == columns
    elif kind is MappingKind.parity:
        matrix = columns <= rows
    else:
        matrix = ((rows & (rows + 1)) <= columns) & (columns <= rows)
    return matrix.astype(numpy.int8)


def gf2_inverse(matrix):
    """ Invert a binary matrix over GF(2) by Gauss-Jordan elimination.

    """
    n = matrix.shape[0]
    work = numpy.concatenate(
        (matrix.astype(numpy.int8) % 2, numpy.eye(n, dtype=numpy.int8)),
        axis=1)
    for column in range(n):
        pivots = numpy.nonzero(work[column:, column])[0]
        if len(pivots) == 0:
            raise ContractError('encoding matrix is singular')
        pivot = column + pivots[0]
        if pivot != column:
            work[[column, pivot]] = work[[pivot, column]]
        for row in numpy.nonzero(work[:, column])[0]:
            if row != column:
                work[row] ^= work[column]
    return work[:, n:]


class LadderSets(object):
    """ Qubit sets that define the image of the ladder operators of a mode.

    Attributes
    ----------
    mode : int
        The fermionic mode.

    update : frozenset
        Qubits other than ``mode`` whose value changes with the
        occupation of ``mode``.

    parity : frozenset
        Qubits whose sum gives the parity of all lower modes.

    flip : frozenset
        Qubits other than ``mode`` that, added to qubit ``mode``, give the
        occupation of ``mode``.

    """

    def __init__(self, mode, update, parity, flip):
        self.mode = mode
        self.update = frozenset(update)
        self.parity = frozenset(parity)
        self.flip = frozenset(flip)

    @property
    def remainder(self):
        return self.parity.symmetric_difference(self.flip)

    def __repr__(self):
        return 'LadderSets(mode={0}, update={1}, parity={2}, flip={3})'.format(
            self.mode, sorted(self.update), sorted(self.parity),
            sorted(self.flip))


def ladder_sets(kind, n_modes, index=None):
    """ Compute the :class:`~.LadderSets` of every mode, or of the mode
    ``index`` only when it is given.

    Raises
    ------
    ContractError :
        When the encoding does not keep the sets disjoint from the mode
        qubit (not lower triangular with a unit diagonal).

    """
    matrix = encoding_matrix(kind, n_modes)
    inverse = gf2_inverse(matrix)
    result = []
    for mode in range(n_modes):
        if matrix[mode, mode] != 1 or inverse[mode, mode] != 1:
            raise ContractError('encoding needs a unit diagonal')
        update = set(numpy.nonzero(matrix[:, mode])[0]) - set([mode])
        parity_row = inverse[:mode].sum(axis=0) % 2
        parity = set(numpy.nonzero(parity_row)[0])
        flip = set(numpy.nonzero(inverse[mode])[0]) - set([mode])
        if mode in parity or update & (parity | flip):
            raise ContractError('encoding sets overlap for mode {0}'.format(
                mode))
        result.append(LadderSets(
            mode, [int(i) for i in update], [int(i) for i in parity],
            [int(i) for i in flip]))
    if index is not None:
        return result[index]
    return result
