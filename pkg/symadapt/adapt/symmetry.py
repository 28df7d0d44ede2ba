# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
import enum
from collections import namedtuple

import numpy

from symadapt.errors import ContractError
from symadapt.pauli import commutator

#: Largest distance between a target and the spectrum entry it names.
MEMBER_TOLERANCE = 1e-12


class SymmetryKind(enum.Enum):
    number = 'number'
    spin = 'spin'


class SymmetrySpec(namedtuple(
        'SymmetrySpec', ['operator', 'eigenvalues', 'target', 'kind'])):
    """ A symmetry operator with its complete spectrum and a target value.

    Attributes
    ----------
    operator : PauliSum
        Qubit image of the symmetry operator.

    eigenvalues : tuple
        All distinct eigenvalues in ascending order.

    target : float
        The eigenvalue selected by the adaptation.

    kind : SymmetryKind
        Whether the values are particle numbers or ``S(S+1)``.

    """

    def __new__(cls, operator, eigenvalues, target, kind):
        eigenvalues = tuple(float(value) for value in eigenvalues)
        if len(eigenvalues) == 0:
            raise ContractError('a symmetry needs at least one eigenvalue')
        steps = numpy.diff(eigenvalues)
        if numpy.any(steps <= MEMBER_TOLERANCE):
            if numpy.any(numpy.abs(steps) <= MEMBER_TOLERANCE):
                raise ContractError('repeated eigenvalues in {0}'.format(
                    eigenvalues))
            raise ContractError('eigenvalues must be ascending')
        target = float(target)
        distance = numpy.abs(numpy.array(eigenvalues) - target)
        if distance.min() > MEMBER_TOLERANCE:
            raise ContractError(
                'target {0} is not an eigenvalue'.format(target))
        target = eigenvalues[int(distance.argmin())]
        return super(SymmetrySpec, cls).__new__(
            cls, operator, eigenvalues, target, SymmetryKind(kind))

    @property
    def others(self):
        """ The eigenvalues other than the target, nearest first.

        """
        return sorted(
            (value for value in self.eigenvalues if value != self.target),
            key=lambda value: (abs(value - self.target), value))


def number_spec(operator, n_spin_orbitals, target):
    """ Particle-number symmetry with eigenvalues ``0..n_spin_orbitals``.

    """
    return SymmetrySpec(
        operator, range(n_spin_orbitals + 1), target, SymmetryKind.number)


def spin_spec(operator, n_spin_orbitals, spin):
    """ Total-spin symmetry with eigenvalues ``S(S+1)`` for ``S = 0, 1/2,
    ..., n_spin_orbitals / 4``; the target is given as ``S``.

    """
    doubled = 2.0 * spin
    if spin < 0 or abs(doubled - round(doubled)) > MEMBER_TOLERANCE:
        raise ContractError(
            'spin must be a non-negative half-integer, got {0}'.format(spin))
    spins = [0.5 * k for k in range(n_spin_orbitals // 2 + 1)]
    return SymmetrySpec(
        operator, [s * (s + 1.0) for s in spins], spin * (spin + 1.0),
        SymmetryKind.spin)


def commutator_residual(a, b):
    """ Norm of ``[a, b]`` in the Pauli basis (see
    :meth:`~.PauliSum.hs_norm`).

    """
    return commutator(a, b, threshold=0.0).hs_norm()
