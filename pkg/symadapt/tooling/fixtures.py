# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
""" Integral files of the reference molecules, computed with pyscf.

pyscf is imported only when a file is generated; install it with the
``fixtures`` extra.

Canonical restricted Hartree-Fock orbitals in C2v symmetry. The molecular
orbital integrals are restricted to the active space with
:meth:`symadapt.fermion.IntegralSet.active_space`, so the frozen core
energy ends up in the ``ECORE`` header and the nuclear repulsion in the
``0 0 0 0`` record.

Orbitals are named Mulliken style (``3a1`` is the third ``A1`` orbital in
energy order). ``b1`` is the irrep that is odd under the molecular plane,
whichever axis pyscf chose for it.

"""
import importlib.util
import logging
import os

import numpy

from symadapt.errors import ContractError, UsageError
from symadapt.fermion import IntegralSet, dump_fcidump

logger = logging.getLogger(__name__)

FIXTURES = dict((
    ('lih_sto3g', dict(
        atom='Li 0 0 0; H 0 0 3.20', basis='sto-3g',
        core=('1a1',), active=('2a1', '3a1', '4a1'))),
    ('h2o_631g', dict(
        atom=None, basis='6-31g',
        core=('1a1', '2a1', '1b2'), active=('1b1', '3a1', '4a1', '2b1')))))

WATER_BOND = 2.05
WATER_ANGLE = 107.6


def water_geometry(bond=WATER_BOND, angle=WATER_ANGLE):
    half = numpy.radians(angle) / 2.0
    y = bond * numpy.sin(half)
    z = bond * numpy.cos(half)
    return 'O 0 0 0; H 0 {0:.10f} {1:.10f}; H 0 {2:.10f} {1:.10f}'.format(
        y, z, -y)


def orbital_names(mol, mo_coeff):
    """ Mulliken names of the molecular orbitals, in energy order.

    """
    from pyscf import symm

    irreps = symm.label_orb_symm(
        mol, mol.irrep_name, mol.symm_orb, mo_coeff)
    # The out-of-plane irrep has fewer functions than the in-plane one.
    sizes = dict(
        (name, orbitals.shape[1])
        for name, orbitals in zip(mol.irrep_name, mol.symm_orb))
    rename = {}
    if sizes.get('B1', 0) > sizes.get('B2', 0):
        rename = {'B1': 'B2', 'B2': 'B1'}
    seen = {}
    names = []
    for irrep in irreps:
        irrep = rename.get(irrep, irrep)
        seen[irrep] = seen.get(irrep, 0) + 1
        names.append('{0}{1}'.format(seen[irrep], irrep.lower()))
    return names, symm.convert_orbsym(mol.groupname, irreps)


def mo_integrals(atom, basis):
    """ Full molecular orbital integrals of a restricted Hartree-Fock run.

    """
    from pyscf import ao2mo, gto, scf

    mol = gto.M(
        atom=atom, basis=basis, unit='Angstrom', symmetry='C2v', verbose=0)
    mf = scf.RHF(mol)
    energy = mf.kernel()
    if not mf.converged:
        raise ContractError('SCF did not converge for {0}'.format(atom))
    logger.info('RHF energy %.10f', energy)
    c = mf.mo_coeff
    n = c.shape[1]
    h = c.T.dot(mf.get_hcore()).dot(c)
    g = ao2mo.restore(1, ao2mo.kernel(mol, c), n)
    names, orbsym = orbital_names(mol, c)
    integrals = IntegralSet(
        0.5 * (h + h.T), g, n_electrons=mol.nelectron,
        v_nn=mol.energy_nuc(), orbsym=orbsym)
    return integrals, names


def make_fixture(atom, basis, core, active):
    integrals, names = mo_integrals(atom, basis)
    indices = dict((name, index) for index, name in enumerate(names))
    missing = [name for name in core + active if name not in indices]
    if missing:
        raise ContractError('no orbitals named {0}'.format(', '.join(missing)))
    return integrals.active_space(
        [indices[name] for name in core], [indices[name] for name in active])


def pyscf_available():
    return importlib.util.find_spec('pyscf') is not None


def write_fixture(name, directory):
    """ Compute the integrals of a reference molecule and write them as
    ``<directory>/<name>.fcidump``.

    Arguments
    ---------
    name : str
        One of the keys of :data:`FIXTURES`.

    Returns
    -------
    filename : str

    Raises
    ------
    UsageError :
        For an unknown molecule or when pyscf is not installed.

    """
    if name not in FIXTURES:
        raise UsageError('no reference molecule {0!r}'.format(name))
    if not pyscf_available():
        raise UsageError('generating integrals needs pyscf')
    settings = dict(FIXTURES[name])
    if settings['atom'] is None:
        settings['atom'] = water_geometry()
    integrals = make_fixture(**settings)
    filename = os.path.join(directory, name + '.fcidump')
    with open(filename, 'w') as handle:
        handle.write(dump_fcidump(integrals))
    logger.info(
        '%s: %d orbitals, %d electrons, v_nn %.6f', filename,
        integrals.n_orbitals, integrals.n_electrons, integrals.v_nn)
    return filename
