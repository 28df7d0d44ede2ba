import numpy

from symadapt.errors import ContractError, DimensionError
from symadapt.pauli.pauli_sum import sum_multiply
from symadapt.util import MAX_QUBITS, basis_indices, sign_of


class StateVector(object):
    """ An explicit ``2**n`` amplitude vector.

    Basis index ``b`` has qubit ``i`` in state ``|1>`` when bit ``i`` of
    ``b`` is set (qubit 0 is the least significant bit).

    Attributes
    ----------
    n_qubits : int
        The number of qubits.

    amplitudes : numpy.ndarray
        Read-only complex amplitudes.

    """

    def __init__(self, n_qubits, amplitudes):
        n_qubits = int(n_qubits)
        if not 0 < n_qubits <= MAX_QUBITS:
            raise DimensionError('bad qubit count {0}'.format(n_qubits))
        amplitudes = numpy.array(amplitudes, dtype=complex).ravel()
        if len(amplitudes) != 1 << n_qubits:
            raise DimensionError(
                'expected {0} amplitudes, got {1}'.format(
                    1 << n_qubits, len(amplitudes)))
        amplitudes.flags.writeable = False
        self.n_qubits = n_qubits
        self.amplitudes = amplitudes

    @classmethod
    def basis(cls, n_qubits, index):
        amplitudes = numpy.zeros(1 << n_qubits, dtype=complex)
        amplitudes[index] = 1.0
        return cls(n_qubits, amplitudes)

    @classmethod
    def from_bits(cls, bits):
        """ Create a basis state from a ket string like ``'000011'``.

        The rightmost character is qubit 0.

        """
        return cls.basis(len(bits), int(bits, 2))

    @classmethod
    def random(cls, n_qubits, rng=None):
        """ A normalized state with Gaussian random amplitudes.

        Arguments
        ---------
        rng : numpy.random.Generator
            The random generator; a fresh default one when ``None``.

        """
        rng = numpy.random.default_rng() if rng is None else rng
        size = 1 << n_qubits
        amplitudes = rng.normal(size=size) + 1j * rng.normal(size=size)
        return cls(n_qubits, amplitudes / numpy.linalg.norm(amplitudes))

    @classmethod
    def superposition(cls, states, weights=None):
        """ Normalized linear combination of states.

        """
        states = list(states)
        if weights is None:
            weights = numpy.ones(len(states))
        amplitudes = sum(
            w * s.amplitudes for w, s in zip(weights, states))
        return cls(
            states[0].n_qubits, amplitudes / numpy.linalg.norm(amplitudes))

    @property
    def norm(self):
        return float(numpy.linalg.norm(self.amplitudes))

    def is_normalized(self, tol=1e-12):
        return abs(self.norm ** 2 - 1.0) <= tol


def expectation(a, psi):
    """ Evaluate ``<psi|A|psi>`` word by word.

    Each word ``X^x Z^z`` maps ``|b>`` to ``(-1)**popcount(z & b) |b ^ x>``
    so no operator matrix is built.

    Arguments
    ---------
    a : PauliSum
        The operator.

    psi : StateVector
        A normalized state on the same number of qubits.

    Returns
    -------
    value : float or complex
        Real when ``a`` is Hermitian.

    """
    if a.n_qubits != psi.n_qubits:
        raise DimensionError(
            'operator on {0} qubits, state on {1}'.format(
                a.n_qubits, psi.n_qubits))
    index = basis_indices(psi.n_qubits)
    amplitudes = psi.amplitudes
    value = 0j
    for x, z, coefficient in zip(a.x, a.z, a.coeffs):
        bra = numpy.conj(amplitudes[(index ^ x).astype(numpy.intp)])
        value += coefficient * numpy.dot(bra, sign_of(index & z) * amplitudes)
    if a.is_hermitian():
        return float(value.real)
    return complex(value)


def variance(a, psi):
    """ Return ``<A**2> - <A>**2`` for a Hermitian operator.

    Raises
    ------
    ContractError :
        When ``a`` is not Hermitian.

    """
    if not a.is_hermitian():
        raise ContractError('variance needs a Hermitian operator')
    mean = expectation(a, psi)
    return expectation(sum_multiply(a, a, threshold=0.0), psi) - mean ** 2
