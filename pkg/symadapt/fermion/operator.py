# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
import numbers
from collections import defaultdict

from symadapt.errors import DimensionError


class FermionOperator(object):
    """ A weighted sum of strings of creation and annihilation operators.

    A string is a tuple of ``(index, dagger)`` actions read left to
    right, e.g. ``((3, True), (1, False))`` for ``a^dagger_3 a_1``. The
    empty tuple is the identity.

    Operators built with the default constructor are stored in the
    canonical normal-ordered form: creators left of annihilators and
    indices descending within each block, the sign tracked through
    every transposition. Equal physical operators therefore have equal
    term dictionaries.

    Attributes
    ----------
    n_spin_orbitals : int
        The number of fermionic modes.

    terms : dict
        Mapping from action string to complex coefficient.

    """

    def __init__(self, n_spin_orbitals, terms=None, normal_ordered=True):
        n_spin_orbitals = int(n_spin_orbitals)
        if n_spin_orbitals < 1:
            raise DimensionError('at least one spin-orbital is needed')
        terms = {} if terms is None else terms
        if hasattr(terms, 'items'):
            terms = terms.items()
        accumulated = defaultdict(complex)
        for string, coefficient in terms:
            string = tuple(
                (int(index), bool(dagger)) for index, dagger in string)
            for index, _ in string:
                if not 0 <= index < n_spin_orbitals:
                    raise DimensionError(
                        'mode {0} outside 0..{1}'.format(
                            index, n_spin_orbitals - 1))
            if normal_ordered:
                for ordered, value in _normal_order_string(
                        string, complex(coefficient)):
                    accumulated[ordered] += value
            else:
                accumulated[string] += complex(coefficient)
        self.n_spin_orbitals = n_spin_orbitals
        self.terms = dict(
            (string, value) for string, value in accumulated.items()
            if value != 0)

    @classmethod
    def raw(cls, n_spin_orbitals, terms):
        """ Create an operator that keeps the strings exactly as given.

        """
        return cls(n_spin_orbitals, terms, normal_ordered=False)

    @classmethod
    def ladder(cls, n_spin_orbitals, index, dagger, coefficient=1.0):
        return cls(n_spin_orbitals, {((index, dagger),): coefficient})

    @classmethod
    def identity(cls, n_spin_orbitals, coefficient=1.0):
        return cls(n_spin_orbitals, {(): coefficient})

    @property
    def is_normal_ordered(self):
        return all(_is_normal_ordered(string) for string in self.terms)

    def adjoint(self):
        terms = [
            (tuple((index, not dagger) for index, dagger in reversed(s)),
             value.conjugate())
            for s, value in self.terms.items()]
        return FermionOperator(self.n_spin_orbitals, terms)

    def is_hermitian(self, tol=1e-12):
        difference = normal_order(self) - self.adjoint()
        return all(abs(value) <= tol for value in difference.terms.values())

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items()))

    def __eq__(self, other):
        if not isinstance(other, FermionOperator):
            return NotImplemented
        return (
            self.n_spin_orbitals == other.n_spin_orbitals and
            self.terms == other.terms)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __repr__(self):
        return 'FermionOperator(n_spin_orbitals={0}, terms={1})'.format(
            self.n_spin_orbitals, len(self.terms))

    def __add__(self, other):
        if isinstance(other, numbers.Number):
            other = FermionOperator.identity(self.n_spin_orbitals, other)
        _check_modes(self, other)
        return FermionOperator(
            self.n_spin_orbitals,
            list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return self * -1.0

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, numbers.Number):
            return FermionOperator(
                self.n_spin_orbitals,
                [(s, value * other) for s, value in self.terms.items()])
        _check_modes(self, other)
        products = [
            (left + right, a * b)
            for left, a in self.terms.items()
            for right, b in other.terms.items()]
        return FermionOperator(self.n_spin_orbitals, products)

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return self * other
        return NotImplemented


def normal_order(op):
    """ Return the canonical normal-ordered form of an operator.

    The anticommutation relation ``{a_p, a^dagger_q} = delta_pq`` is
    applied while sorting, strings with a repeated creator or
    annihilator vanish.

    Arguments
    ---------
    op : FermionOperator
        Any operator, possibly created with :meth:`FermionOperator.raw`.

    Returns
    -------
    ordered : FermionOperator

    """
    return FermionOperator(op.n_spin_orbitals, op.terms)


#------------------------------------------------------------------------------
#  Private functions
#------------------------------------------------------------------------------

def _normal_order_string(string, coefficient):
    """ Normal order one action string.

    Returns
    -------
    terms : list
        ``(string, coefficient)`` pairs in canonical form.

    """
    result = []
    string = list(string)
    for i in range(1, len(string)):
        for j in range(i, 0, -1):
            right = string[j]
            left = string[j - 1]
            if right[1] and not left[1]:
                string[j - 1] = right
                string[j] = left
                coefficient = -coefficient
                if right[0] == left[0]:
                    contracted = string[:j - 1] + string[j + 1:]
                    result += _normal_order_string(contracted, -coefficient)
            elif right[1] == left[1]:
                if right[0] == left[0]:
                    return result
                elif right[0] > left[0]:
                    string[j - 1] = right
                    string[j] = left
                    coefficient = -coefficient
    result.append((tuple(string), coefficient))
    return result


def _is_normal_ordered(string):
    for left, right in zip(string, string[1:]):
        if right[1] and not left[1]:
            return False
        if right[1] == left[1] and right[0] >= left[0]:
            return False
    return True


def _check_modes(a, b):
    if a.n_spin_orbitals != b.n_spin_orbitals:
        raise DimensionError(
            'operators on {0} and {1} modes'.format(
                a.n_spin_orbitals, b.n_spin_orbitals))
