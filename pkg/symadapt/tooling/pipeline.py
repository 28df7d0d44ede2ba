# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
""" The build, adapt and spectra stages behind the command line.

"""
import logging
import os
import time
from collections import namedtuple

from symadapt.adapt import (
    AdaptationMethod, number_spec, project_hamiltonian, reflect_operator,
    reflect_singlet, shift_operator, spin_spec, sum_over_states)
from symadapt.errors import UsageError
from symadapt.fermion import (
    SpinOrbitalConvention, build_hamiltonian, build_number_operator,
    build_s2_operator, read_fcidump)
from symadapt.mapping import MappingKind, map_operator
from symadapt.pauli import dump_operator
from symadapt.pauli.serialize import render_json
from symadapt.spectra import compare_spectra, diagonalize, label_spectrum
from symadapt.util import format_float

logger = logging.getLogger(__name__)

#: Targets of the term-count grid, as (label, symmetry, offset or spin).
GRID_TARGETS = (
    ('Neutral', 'number', 0),
    ('Cation', 'number', -1),
    ('Anion', 'number', 1),
    ('Singlet', 'spin', 0.0),
    ('Triplet', 'spin', 1.0))

#: Adapted operators shown next to the original spectrum by default.
SPECTRUM_METHODS = (
    ('PHP', 'php'), ('L', 'shift'), ('Reflection', 'reflect'))

COLUMN_TITLES = {
    AdaptationMethod.lowdin_PHP: 'PHP',
    AdaptationMethod.lowdin_HP: 'HP',
    AdaptationMethod.shift: 'L',
    AdaptationMethod.reflection: 'Reflection',
    AdaptationMethod.reflection_singlet: 'Singlet reflection',
    AdaptationMethod.sum_over_states: 'Sum over states'}


class BuiltOperators(namedtuple(
        'BuiltOperators',
        ['hamiltonian', 'number', 's2', 'integrals', 'config'])):
    """ Qubit images of the Hamiltonian, number and total spin operators.

    """

    @property
    def n_qubits(self):
        return self.hamiltonian.n_qubits

    def summary(self):
        return {
            'n_qubits': self.n_qubits,
            'n_electrons': self.integrals.n_electrons,
            'v_nn': self.integrals.v_nn,
            'e_core': self.integrals.e_core,
            'term_counts': {
                'hamiltonian': self.hamiltonian.term_count,
                'number': self.number.term_count,
                's2': self.s2.term_count}}


def load_integrals(config):
    """ Read the integrals and restrict them to the active space.

    Raises
    ------
    UsageError :
        Without an integral file or with an empty active space.

    """
    if config.fcidump is None:
        raise UsageError('no FCIDUMP file given')
    if config.active is not None and len(config.active) == 0:
        raise UsageError('the active space is empty')
    try:
        integrals = read_fcidump(config.fcidump)
    except IOError as error:
        raise UsageError('cannot read {0}: {1}'.format(config.fcidump, error))
    if config.core or config.active is not None:
        integrals = integrals.active_space(config.core, config.active)
    return integrals


def build_operators(config):
    """ Build and map the three operators of a molecule.

    """
    start = time.time()
    integrals = load_integrals(config)
    kind = MappingKind.parse(config.mapping)
    convention = _convention(config)
    n_so = integrals.n_spin_orbitals
    fermionic = (
        build_hamiltonian(integrals, convention, config.include_vnn),
        build_number_operator(n_so, convention),
        build_s2_operator(n_so, convention))
    images = [map_operator(op, kind, threshold=config.threshold)
              for op in fermionic]
    logger.info('built operators in %.2f s', time.time() - start)
    return BuiltOperators(images[0], images[1], images[2], integrals, config)


def make_spec(built, symmetry, target=None):
    """ The symmetry spec of ``built`` for a target electron count or spin.

    The neutral electron count and ``S = 0`` are the defaults.

    """
    n_so = built.n_qubits
    if symmetry == 'number':
        if target is None:
            target = built.integrals.n_electrons
        return number_spec(built.number, n_so, target)
    return spin_spec(built.s2, n_so, 0.0 if target is None else target)


def adapt(built, method, spec, config):
    """ Build one adapted operator.

    """
    method = AdaptationMethod.parse(method)
    h = built.hamiltonian
    threshold = config.threshold
    if method is AdaptationMethod.lowdin_PHP:
        return project_hamiltonian(h, spec, 'PHP', threshold=threshold)
    if method is AdaptationMethod.lowdin_HP:
        return project_hamiltonian(h, spec, 'HP', threshold=threshold)
    if method is AdaptationMethod.shift:
        return shift_operator(h, spec, mu=config.mu, threshold=threshold)
    if method is AdaptationMethod.reflection:
        return reflect_operator(
            h, spec, threshold=threshold, dense_limit=config.dense_limit)
    if method is AdaptationMethod.reflection_singlet:
        return reflect_singlet(
            h, built.s2, threshold=threshold, dense_limit=config.dense_limit)
    return sum_over_states(
        h, spec, dense_limit=config.dense_limit, threshold=threshold)


def term_count_grid(built, config):
    """ Term counts of the projected, shifted and reflected Hamiltonians
    for the neutral, cation, anion, singlet and triplet targets.

    The singlet reflection uses the simplified singlet formula.

    Returns
    -------
    grid : list
        ``(label, (php, shift, reflection))`` pairs.

    """
    grid = []
    neutral = built.integrals.n_electrons
    for label, symmetry, value in GRID_TARGETS:
        target = neutral + value if symmetry == 'number' else value
        spec = make_spec(built, symmetry, target)
        reflection = 'reflect-singlet' if label == 'Singlet' else 'reflect'
        counts = tuple(
            adapt(built, method, spec, config).term_count
            for method in ('php', 'shift', reflection))
        grid.append((label, counts))
    return grid


def spectrum_methods(config):
    """ ``(title, method)`` of every adapted operator in a spectra report.

    """
    if config.columns is None:
        return SPECTRUM_METHODS
    return tuple(
        (COLUMN_TITLES[AdaptationMethod.parse(method)], method)
        for method in config.columns)


def spectra_report(built, config, methods=None):
    """ The labeled spectrum and the spectra of the adapted operators.

    The columns follow ``methods``, or the ``columns`` setting of
    ``config`` when not given.

    Returns
    -------
    spectrum : LabeledSpectrum

    columns : list
        ``(title, eigenvalues, matched)`` per method for
        :func:`~.spectrum_table`.

    reports : list
        The :class:`~.SpectrumMatchReport` of every method.

    """
    spectrum = label_spectrum(
        built.hamiltonian, built.number, built.s2,
        dense_limit=config.dense_limit)
    spec = make_spec(built, config.symmetry, config.target)
    columns = []
    if methods is None:
        methods = spectrum_methods(config)
    reports = []
    for title, method in methods:
        adapted = adapt(built, method, spec, config)
        eigenvalues, _ = diagonalize(
            adapted.result, dense_limit=config.dense_limit)
        report = compare_spectra(
            spectrum, eigenvalues, spec, adapted.method, mu=config.mu)
        columns.append((title, eigenvalues, report.matched_levels))
        reports.append(report)
    return spectrum, columns, reports


def spectrum_document(spectrum, columns, config):
    """ JSON compatible form of a spectrum report.

    """
    levels = []
    for level, energy in enumerate(spectrum.energies):
        n, s = spectrum.label(level)
        entry = {
            'level': level, 'n': n, 's': s,
            'n_value': float(spectrum.n_values[level]),
            's2_value': float(spectrum.s2_values[level]),
            'energy': float(energy)}
        for title, eigenvalues, matched in columns:
            entry[title] = {
                'energy': float(eigenvalues[level]),
                'matched': level in matched}
        levels.append(entry)
    return {'levels': levels, 'provenance': config.provenance()}


def write_operator(directory, name, operator, provenance, threshold):
    """ Write an operator as ``<directory>/<name>.json``.

    """
    if not os.path.isdir(directory):
        os.makedirs(directory)
    filename = os.path.join(directory, name + '.json')
    with open(filename, 'w') as handle:
        handle.write(dump_operator(
            operator, threshold=threshold, provenance=provenance))
    logger.info('wrote %s', filename)
    return filename


def write_document(directory, name, document):
    if not os.path.isdir(directory):
        os.makedirs(directory)
    filename = os.path.join(directory, name + '.json')
    with open(filename, 'w') as handle:
        handle.write(render_json(document) + '\n')
    logger.info('wrote %s', filename)
    return filename


def adapted_name(adapted):
    """ File name stem of an adapted operator, e.g. ``shift_number_2``.

    """
    provenance = adapted.provenance
    return '{0}_{1}_{2}'.format(
        provenance['method'], provenance['symmetry'],
        format_float(provenance['target']))


def _convention(config):
    try:
        return SpinOrbitalConvention(config.ordering)
    except ValueError:
        raise UsageError('unsupported ordering {0!r}'.format(config.ordering))
