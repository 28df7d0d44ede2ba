# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
import enum
import logging

import numpy

from symadapt.errors import ContractError
from symadapt.fermion.operator import FermionOperator

logger = logging.getLogger(__name__)

ALPHA = 0
BETA = 1


class SpinOrbitalConvention(enum.Enum):
    """ Placement of spin-orbitals on fermionic modes.

    ``interleaved`` puts spatial orbital ``p`` with spin alpha on mode
    ``2p`` and with spin beta on ``2p + 1``; ``blocked`` puts all alpha
    modes before all beta modes.

    """
    interleaved = 'interleaved'
    blocked = 'blocked'

    def mode(self, orbital, spin, n_orbitals):
        if self is SpinOrbitalConvention.interleaved:
            return 2 * orbital + spin
        return orbital + spin * n_orbitals


def build_hamiltonian(integrals, convention=SpinOrbitalConvention.interleaved,
                      include_vnn=False):
    """ Build the second-quantized electronic Hamiltonian.

    ``H = sum_pq h_pq a+_p a_q + 1/2 sum_pqrs g_pqrs a+_p a+_q a_s a_r``
    over spin-orbitals, where ``g_pqrs = (pr|qs)`` in chemist notation
    and both integrals vanish between opposite spins. The frozen-core
    energy ``e_core`` is always added as a constant; the nuclear
    repulsion only when requested.

    Arguments
    ---------
    integrals : IntegralSet
        The spatial-orbital integrals.

    convention : SpinOrbitalConvention
        The spin-orbital ordering.

    include_vnn : bool
        Add ``v_nn`` to the identity term.

    Returns
    -------
    hamiltonian : FermionOperator
        Normal-ordered operator on ``2 * n_orbitals`` modes.

    """
    convention = SpinOrbitalConvention(convention)
    n = integrals.n_orbitals
    mode = convention.mode
    terms = []
    constant = integrals.e_core + (integrals.v_nn if include_vnn else 0.0)
    if constant != 0.0:
        terms.append(((), constant))
    for p, q in zip(*numpy.nonzero(integrals.h)):
        value = integrals.h[p, q]
        for spin in (ALPHA, BETA):
            terms.append(
                (((mode(p, spin, n), True), (mode(q, spin, n), False)),
                 value))
    # g_pqrs (physicist) = (pr|qs) (chemist)
    physicist = integrals.g.transpose(0, 2, 1, 3)
    for p, q, r, s in zip(*numpy.nonzero(physicist)):
        value = 0.5 * physicist[p, q, r, s]
        for sigma in (ALPHA, BETA):
            for tau in (ALPHA, BETA):
                P = mode(p, sigma, n)
                Q = mode(q, tau, n)
                R = mode(r, sigma, n)
                S = mode(s, tau, n)
                if P == Q or R == S:
                    continue
                terms.append(
                    (((P, True), (Q, True), (S, False), (R, False)), value))
    hamiltonian = FermionOperator(2 * n, terms)
    logger.info(
        'fermionic Hamiltonian: %d spin-orbitals, %d terms',
        2 * n, len(hamiltonian))
    return hamiltonian


def build_number_operator(n_spin_orbitals,
                          convention=SpinOrbitalConvention.interleaved):
    """ ``N = sum_i a+_i a_i``. The result does not depend on the convention.

    """
    return FermionOperator(
        n_spin_orbitals,
        [(((i, True), (i, False)), 1.0) for i in range(n_spin_orbitals)])


def build_sz_operator(n_spin_orbitals,
                      convention=SpinOrbitalConvention.interleaved):
    convention = SpinOrbitalConvention(convention)
    n = _spatial_orbitals(n_spin_orbitals)
    terms = []
    for p in range(n):
        alpha = convention.mode(p, ALPHA, n)
        beta = convention.mode(p, BETA, n)
        terms.append((((alpha, True), (alpha, False)), 0.5))
        terms.append((((beta, True), (beta, False)), -0.5))
    return FermionOperator(n_spin_orbitals, terms)


def build_spin_ladder(n_spin_orbitals,
                      convention=SpinOrbitalConvention.interleaved,
                      raising=True):
    """ ``S+ = sum_p a+_{p alpha} a_{p beta}`` or its adjoint ``S-``.

    """
    convention = SpinOrbitalConvention(convention)
    n = _spatial_orbitals(n_spin_orbitals)
    terms = []
    for p in range(n):
        alpha = convention.mode(p, ALPHA, n)
        beta = convention.mode(p, BETA, n)
        if raising:
            terms.append((((alpha, True), (beta, False)), 1.0))
        else:
            terms.append((((beta, True), (alpha, False)), 1.0))
    return FermionOperator(n_spin_orbitals, terms)


def build_s2_operator(n_spin_orbitals,
                      convention=SpinOrbitalConvention.interleaved):
    """ Total spin squared, ``S_z**2 + (S+ S- + S- S+) / 2``.

    Raises
    ------
    ContractError :
        For an odd number of spin-orbitals.

    """
    sz = build_sz_operator(n_spin_orbitals, convention)
    raising = build_spin_ladder(n_spin_orbitals, convention, raising=True)
    lowering = build_spin_ladder(n_spin_orbitals, convention, raising=False)
    return sz * sz + 0.5 * (raising * lowering + lowering * raising)


def _spatial_orbitals(n_spin_orbitals):
    if n_spin_orbitals % 2:
        raise ContractError(
            'spin operators need an even number of spin-orbitals, '
            'got {0}'.format(n_spin_orbitals))
    return n_spin_orbitals // 2
