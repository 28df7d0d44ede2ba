import re
from collections import namedtuple

from symadapt.errors import DimensionError, ParseError
from symadapt.util import MAX_QUBITS, popcount

factor_regex = re.compile(r'([IXYZ])(\d*)$')


class PauliWord(namedtuple('PauliWord', ['n_qubits', 'x_mask', 'z_mask'])):
    """ A tensor product of single-qubit Pauli operators.

    The word denotes the operator ``prod_i X_i**x_i * prod_i Z_i**z_i``.
    A qubit with both bits set carries ``X Z = -i Y``; the compensating
    phase lives in the coefficient of the owning
    :class:`~.PauliSum`.

    Attributes
    ----------
    n_qubits : int
        The number of qubits the word acts on.

    x_mask : int
        Bit ``i`` is set when qubit ``i`` carries an X factor.

    z_mask : int
        Bit ``i`` is set when qubit ``i`` carries a Z factor.

    """

    def __new__(cls, n_qubits, x_mask=0, z_mask=0):
        n_qubits = int(n_qubits)
        x_mask = int(x_mask)
        z_mask = int(z_mask)
        if not 0 < n_qubits <= MAX_QUBITS:
            raise DimensionError(
                'n_qubits must be in 1..{0}, got {1}'.format(
                    MAX_QUBITS, n_qubits))
        if x_mask < 0 or z_mask < 0 or (x_mask | z_mask) >> n_qubits:
            raise DimensionError(
                'masks do not fit in {0} qubits'.format(n_qubits))
        return super(PauliWord, cls).__new__(cls, n_qubits, x_mask, z_mask)

    @classmethod
    def identity(cls, n_qubits):
        return cls(n_qubits, 0, 0)

    @classmethod
    def single(cls, n_qubits, qubit, pauli):
        """ Create a word with one non-identity factor.

        Arguments
        ---------
        pauli : str
            One of ``'X'`` or ``'Z'``. ``'Y'`` is not accepted here since
            it needs a phase; use :meth:`from_label`.

        """
        bit = 1 << qubit
        if pauli == 'X':
            return cls(n_qubits, bit, 0)
        elif pauli == 'Z':
            return cls(n_qubits, 0, bit)
        raise ValueError('expected X or Z, got {0!r}'.format(pauli))

    @classmethod
    def from_label(cls, label, n_qubits):
        """ Parse a label like ``'X0 Y3 Z5'`` (``'I'`` for identity).

        Returns
        -------
        word : PauliWord
            The word in the X^a Z^b encoding.

        phase : complex
            The factor ``i**(number of Y)`` such that the labelled
            operator equals ``phase * word``.

        """
        x_mask = 0
        z_mask = 0
        n_y = 0
        for factor in label.split():
            match = factor_regex.match(factor)
            if match is None:
                raise ParseError('bad Pauli factor {0!r}'.format(factor))
            pauli, index = match.groups()
            if pauli == 'I':
                continue
            if index == '':
                raise ParseError(
                    'Pauli factor {0!r} has no qubit index'.format(factor))
            bit = 1 << int(index)
            if (x_mask | z_mask) & bit:
                raise ParseError('qubit {0} repeated in {1!r}'.format(
                    index, label))
            if pauli in 'XY':
                x_mask |= bit
            if pauli in 'ZY':
                z_mask |= bit
            if pauli == 'Y':
                n_y += 1
        return cls(n_qubits, x_mask, z_mask), 1j ** n_y

    @property
    def n_y(self):
        """ The number of qubits carrying a Y factor.

        """
        return popcount(self.x_mask & self.z_mask)

    @property
    def label(self):
        """ Render the word in the X/Y/Z basis, e.g. ``'X0 Y3 Z5'``.

        """
        factors = []
        for qubit in range(self.n_qubits):
            x = (self.x_mask >> qubit) & 1
            z = (self.z_mask >> qubit) & 1
            if x and z:
                factors.append('Y{0}'.format(qubit))
            elif x:
                factors.append('X{0}'.format(qubit))
            elif z:
                factors.append('Z{0}'.format(qubit))
        return ' '.join(factors) if factors else 'I'

    @property
    def xyz_phase(self):
        """ The factor relating the stored word to its X/Y/Z rendering.

        ``word == xyz_phase * P`` where ``P`` is the Hermitian Pauli
        operator named by :attr:`label`.

        """
        return (-1j) ** self.n_y

    def sort_key(self):
        return (self.z_mask, self.x_mask)


def word_multiply(a, b):
    """ Multiply two Pauli words.

    Arguments
    ---------
    a, b : PauliWord
        Words on the same number of qubits.

    Returns
    -------
    word : PauliWord
        The canonical product word.

    phase : int
        ``+1`` or ``-1``; ``a * b == phase * word`` in the X^a Z^b
        encoding. Moving the Z factors of ``a`` past the X factors of
        ``b`` costs one sign per shared qubit.

    Raises
    ------
    DimensionError :
        When the qubit counts differ.

    """
    if a.n_qubits != b.n_qubits:
        raise DimensionError(
            'cannot multiply words on {0} and {1} qubits'.format(
                a.n_qubits, b.n_qubits))
    phase = -1 if popcount(a.z_mask & b.x_mask) & 1 else 1
    word = PauliWord(
        a.n_qubits, a.x_mask ^ b.x_mask, a.z_mask ^ b.z_mask)
    return word, phase
