# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
""" Command line interface.

::

    symadapt build   --fcidump lih_sto3g.fcidump --mapping parity
    symadapt adapt   --fcidump lih_sto3g.fcidump --method shift --mu 16
    symadapt adapt   --fcidump lih_sto3g.fcidump --grid
    symadapt spectra --fcidump lih_sto3g.fcidump
    symadapt spectra --fcidump lih_sto3g.fcidump --column hp --column sos
    symadapt verify  --fcidump lih_sto3g.fcidump --trials 200

Exit status: 0 on success, 2 for usage errors, 3 for unreadable input,
4 for violated preconditions and 5 when a check fails.

"""
import argparse
import logging
import sys

from symadapt.errors import MismatchError, SymadaptError
from symadapt.pauli.serialize import render_json
from symadapt.renderers import spectrum_table, term_count_table
from symadapt.tooling import pipeline, properties
from symadapt.tooling.config import build_config

logger = logging.getLogger(__name__)

METHODS = ('php', 'hp', 'shift', 'reflect', 'reflect-singlet', 'sos')


def make_parser():
    parser = argparse.ArgumentParser(
        prog='symadapt',
        description='Symmetry-adapted qubit Hamiltonians.')
    subparsers = parser.add_subparsers(dest='command')
    for name, help_text in (
            ('build', 'map the Hamiltonian, N and S^2 to qubits'),
            ('adapt', 'build symmetry-adapted Hamiltonians'),
            ('spectra', 'compare the spectra of adapted Hamiltonians'),
            ('verify', 'run the property and acceptance checks')):
        _add_options(subparsers.add_parser(name, help=help_text))
    return parser


def _add_options(parser):
    # Flags default to None so that they only override the configuration
    # file when given.
    parser.add_argument('--config', help='JSON configuration file')
    parser.add_argument('--fcidump', help='integral file')
    parser.add_argument('--mapping', choices=('jw', 'parity', 'bk'))
    parser.add_argument('--ordering', choices=('interleaved', 'blocked'))
    parser.add_argument('--threshold', type=float)
    parser.add_argument('--mu', type=float)
    parser.add_argument('--symmetry', choices=('number', 'spin'))
    parser.add_argument(
        '--target', type=float,
        help='electron count, or total spin S for --symmetry spin')
    parser.add_argument('--method', choices=METHODS)
    parser.add_argument(
        '--column', dest='columns', action='append', choices=METHODS,
        help='adapted operator shown by spectra, repeat for more columns')
    parser.add_argument(
        '--include-vnn', dest='include_vnn', action='store_const',
        const=True)
    parser.add_argument('--dense-limit', dest='dense_limit', type=int)
    parser.add_argument('--out', help='output directory')
    parser.add_argument('--format', choices=('json', 'table'))
    parser.add_argument(
        '--core', type=_indices, help='comma separated frozen orbitals')
    parser.add_argument(
        '--active', type=_indices, help='comma separated active orbitals')
    parser.add_argument('--grid', action='store_const', const=True)
    parser.add_argument('--trials', type=int)
    parser.add_argument('--seed', type=int)
    parser.add_argument(
        '-v', '--verbose', action='count', default=0,
        help='repeat for more output')


def _indices(text):
    return tuple(int(index) for index in text.split(',') if index.strip())


def main(argv=None, stdout=None):
    """ Run the command line and return the exit status.

    """
    stdout = sys.stdout if stdout is None else stdout
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return error.code
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    level = (logging.WARNING, logging.INFO, logging.DEBUG)[
        min(args.verbose, 2)]
    logging.basicConfig(
        level=level, format='%(asctime)s %(name)s %(levelname)s %(message)s')
    overrides = dict(vars(args))
    for key in ('command', 'config', 'verbose'):
        overrides.pop(key)
    try:
        config = build_config(args.config, overrides)
        command = COMMANDS[args.command]
        lines = command(config)
    except SymadaptError as error:
        sys.stderr.write('symadapt: {0}\n'.format(error))
        if isinstance(error, MismatchError) and error.offenders:
            for offender in error.offenders:
                sys.stderr.write('  {0}\n'.format(offender))
        return error.exit_code
    stdout.write('\n'.join(lines) + '\n')
    return 0


#------------------------------------------------------------------------------
#  Subcommands
#------------------------------------------------------------------------------

def run_build(config):
    built = pipeline.build_operators(config)
    summary = built.summary()
    if config.out is not None:
        provenance = config.provenance()
        for name in ('hamiltonian', 'number', 's2'):
            pipeline.write_operator(
                config.out, name, getattr(built, name), provenance,
                config.threshold)
        pipeline.write_document(
            config.out, 'summary', dict(summary, provenance=provenance))
    if config.format == 'json':
        return [render_json(summary)]
    counts = summary['term_counts']
    return [
        'qubits       {0}'.format(summary['n_qubits']),
        'H terms      {0}'.format(counts['hamiltonian']),
        'N terms      {0}'.format(counts['number']),
        'S^2 terms    {0}'.format(counts['s2'])]


def run_adapt(config):
    built = pipeline.build_operators(config)
    if config.grid:
        grid = pipeline.term_count_grid(built, config)
        if config.out is not None:
            pipeline.write_document(config.out, 'term_counts', {
                'grid': [
                    {'target': label, 'counts': list(counts)}
                    for label, counts in grid],
                'provenance': config.provenance()})
        if config.format == 'json':
            return [render_json([
                {'target': label, 'counts': list(counts)}
                for label, counts in grid])]
        return term_count_table(grid)
    spec = pipeline.make_spec(built, config.symmetry, config.target)
    adapted = pipeline.adapt(built, config.method, spec, config)
    provenance = dict(config.provenance(), **adapted.provenance)
    if config.out is not None:
        pipeline.write_operator(
            config.out, pipeline.adapted_name(adapted), adapted.result,
            provenance, config.threshold)
    summary = {
        'method': adapted.method.value,
        'term_count': adapted.term_count,
        'hamiltonian_term_count': built.hamiltonian.term_count}
    if config.format == 'json':
        return [render_json(summary)]
    return ['{0}: {1} terms (H: {2})'.format(
        summary['method'], summary['term_count'],
        summary['hamiltonian_term_count'])]


def run_spectra(config):
    built = pipeline.build_operators(config)
    spectrum, columns, reports = pipeline.spectra_report(built, config)
    document = pipeline.spectrum_document(spectrum, columns, config)
    if config.out is not None:
        pipeline.write_document(config.out, 'spectra', document)
    if config.format == 'json':
        return [render_json(document)]
    highlighted = set(
        match.level for match in reports[0].matches if match.matched) \
        if reports else set()
    return spectrum_table(spectrum, columns, highlighted)


def run_verify(config):
    results = properties.property_suite(config.trials, config.seed)
    if config.fcidump is not None:
        built = pipeline.build_operators(config)
        results.extend(properties.fixture_checks(built, config))
        results.extend(properties.acceptance_checks(built, config))
    lines = [
        '{0:<4}  {1:<40}  {2}'.format(
            'ok' if result.passed else 'FAIL', result.name, result.detail)
        for result in results]
    failed = [result for result in results if not result.passed]
    if failed:
        for line in lines:
            logger.warning(line)
        raise MismatchError(
            '{0} of {1} checks failed'.format(len(failed), len(results)),
            ['{0}: {1}'.format(result.name, result.detail)
             for result in failed])
    return lines


COMMANDS = {
    'build': run_build,
    'adapt': run_adapt,
    'spectra': run_spectra,
    'verify': run_verify}


def entry_point():
    sys.exit(main())
