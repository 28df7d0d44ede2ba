# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
import logging

import numpy

from symadapt.errors import ContractError

logger = logging.getLogger(__name__)

SYMMETRY_TOLERANCE = 1e-12


class IntegralSet(object):
    """ One- and two-electron integrals over spatial orbitals.

    Attributes
    ----------
    n_orbitals : int
        The number of spatial orbitals.

    n_electrons : int
        Number of electrons (metadata).

    h : numpy.ndarray
        ``n x n`` symmetric one-electron integrals in hartree.

    g : numpy.ndarray
        ``n x n x n x n`` two-electron integrals ``(pq|rs)`` in chemist
        notation, hartree.

    v_nn : float
        Nuclear repulsion energy in hartree.

    e_core : float
        Electronic energy of frozen core orbitals in hartree. Always part
        of the Hamiltonian.

    ms2 : int
        Twice the spin projection (metadata).

    orbsym : tuple
        Orbital symmetry labels as given in the source (metadata).

    isym : int
        Target state symmetry (metadata).

    """

    def __init__(self, h, g, n_electrons=0, v_nn=0.0, ms2=0, orbsym=(),
                 isym=1, e_core=0.0):
        h = numpy.array(h, dtype=float)
        g = numpy.array(g, dtype=float)
        n = h.shape[0] if h.ndim == 2 else -1
        if n < 1 or h.shape != (n, n):
            raise ContractError('h must be a non-empty square matrix')
        if g.shape != (n, n, n, n):
            raise ContractError(
                'g must have shape {0}, got {1}'.format((n,) * 4, g.shape))
        if n_electrons < 0:
            raise ContractError('negative electron count')
        _check_symmetry(h, g)
        h.flags.writeable = False
        g.flags.writeable = False
        self.n_orbitals = n
        self.n_electrons = int(n_electrons)
        self.h = h
        self.g = g
        self.v_nn = float(v_nn)
        self.e_core = float(e_core)
        self.ms2 = int(ms2)
        self.orbsym = tuple(orbsym)
        self.isym = int(isym)

    @property
    def n_spin_orbitals(self):
        return 2 * self.n_orbitals

    def active_space(self, core=(), active=None):
        """ Freeze core orbitals and keep a subset of active orbitals.

        The doubly occupied core contributes its energy to ``e_core`` and
        its mean field to ``h``; orbitals in neither list are dropped.

        Arguments
        ---------
        core : sequence
            Zero-based indices of the frozen doubly occupied orbitals.

        active : sequence
            Zero-based indices of the retained orbitals. All non-core
            orbitals when ``None``.

        Returns
        -------
        integrals : IntegralSet

        """
        core = [int(c) for c in core]
        if active is None:
            active = [p for p in range(self.n_orbitals) if p not in core]
        active = [int(p) for p in active]
        everything = core + active
        if len(active) == 0:
            raise ContractError('the active space is empty')
        if len(set(everything)) != len(everything):
            raise ContractError('core and active orbitals overlap')
        if any(not 0 <= p < self.n_orbitals for p in everything):
            raise ContractError('orbital index out of range')
        if 2 * len(core) > self.n_electrons:
            raise ContractError('more core electrons than electrons')
        h, g = self.h, self.g
        e_core = self.e_core
        fock = h.copy()
        if core:
            c = numpy.array(core)
            e_core += 2.0 * numpy.trace(h[numpy.ix_(c, c)])
            e_core += numpy.einsum(
                'iijj->', g[numpy.ix_(c, c, c, c)]) * 2.0
            e_core -= numpy.einsum('ijji->', g[numpy.ix_(c, c, c, c)])
            fock = fock + 2.0 * numpy.einsum('pqcc->pq', g[:, :, c][:, :, :, c])
            fock = fock - numpy.einsum('pccq->pq', g[:, c][:, :, c])
        a = numpy.array(active)
        orbsym = tuple(self.orbsym[p] for p in active) if self.orbsym else ()
        logger.info(
            'active space: %d core, %d active orbitals, e_core = %.10f',
            len(core), len(active), e_core)
        return IntegralSet(
            fock[numpy.ix_(a, a)], g[numpy.ix_(a, a, a, a)],
            n_electrons=self.n_electrons - 2 * len(core), v_nn=self.v_nn,
            ms2=self.ms2, orbsym=orbsym, isym=self.isym, e_core=e_core)


def _check_symmetry(h, g):
    if not numpy.allclose(h, h.T, rtol=0.0, atol=SYMMETRY_TOLERANCE):
        raise ContractError('h is not symmetric')
    images = (
        g.transpose(1, 0, 2, 3), g.transpose(0, 1, 3, 2),
        g.transpose(2, 3, 0, 1))
    for image in images:
        if not numpy.allclose(g, image, rtol=0.0, atol=SYMMETRY_TOLERANCE):
            raise ContractError(
                'g lacks the 8-fold permutational symmetry')
