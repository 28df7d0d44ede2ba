# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
import numpy


#-----------------------------------------------------------------------------
#  Constants
#-----------------------------------------------------------------------------
DEFAULT_THRESHOLD = 1e-10
DEFAULT_DENSE_LIMIT = 12
MAX_QUBITS = 32
COMMUTATOR_TOLERANCE = 1e-8
DEGENERACY_THRESHOLD = 1e-9
LABEL_TOLERANCE = 1e-6
MATCH_TOLERANCE = 1e-6
DEFAULT_MU = 16.0
FLOAT_FORMAT = '{0:.17g}'


#------------------------------------------------------------------------------
#  Functions on bit masks
#------------------------------------------------------------------------------

def parity(values):
    """ Parity of the population count of unsigned integers.

    Arguments
    ---------
    values : numpy.ndarray or int
        Unsigned 64-bit values.

    Returns
    -------
    parity : numpy.ndarray
        ``0`` where the number of set bits is even, ``1`` where it is odd.

    """
    v = numpy.asarray(values, dtype=numpy.uint64).copy()
    for shift in (32, 16, 8, 4, 2, 1):
        v ^= v >> numpy.uint64(shift)
    return (v & numpy.uint64(1)).astype(numpy.int8)


def popcount(value):
    return bin(int(value)).count('1')


def sign_of(values):
    """ Map a parity array to ``+1`` / ``-1``.

    """
    return 1 - 2 * parity(values).astype(numpy.int64)


def basis_indices(n_qubits):
    """ All computational basis indices, qubit 0 least significant.

    """
    return numpy.arange(1 << n_qubits, dtype=numpy.uint64)


#------------------------------------------------------------------------------
#  Functions to render values
#------------------------------------------------------------------------------

def format_float(value):
    """ Render a float with 17 significant digits.

    Negative zero is rendered as ``0`` so that output is stable.

    """
    value = float(value)
    if value == 0.0:
        value = 0.0
    return FLOAT_FORMAT.format(value)


def spin_from_s2(value):
    """ Solve S(S + 1) = value for the non-negative root S.

    """
    return 0.5 * (numpy.sqrt(1.0 + 4.0 * max(value, 0.0)) - 1.0)
