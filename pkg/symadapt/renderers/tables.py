# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
#  file: renderers/tables.py
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
# -----------------------------------------------------------------------------
""" Report tables in the rst simple table markup.

"""
from symadapt.renderers.row import Row, max_cell_length
from symadapt.renderers.table_row import TableRow

ENERGY_FORMAT = '{0:.7f}'


def get_column_lengths(header, rows):
    """ The width of every column, heading included.

    Arguments
    ---------
    header : sequence
        The column headings.

    rows : list
        A list of Rows.

    Returns
    -------
    widths : tuple

    """
    everything = [Row(header)] + list(rows)
    return tuple(
        max_cell_length(everything, column) for column in range(len(header)))


def simple_table(header, rows, renderer=TableRow):
    """ Render rows as an rst simple table.

    """
    columns = get_column_lengths(header, rows)
    border = '  '.join('=' * width for width in columns)
    heading = '  '.join(
        '{0:<{1}}'.format(title, width)
        for title, width in zip(header, columns)).rstrip()
    lines = [border, heading, border]
    line_renderer = renderer()
    for row in rows:
        line_renderer.row = row
        lines += line_renderer.to_rst(columns=columns)
    lines += [border, '']
    return [line.rstrip() for line in lines]


def spectrum_table(spectrum, columns=(), highlighted=()):
    """ Energy levels of an operator and of its adapted forms.

    Arguments
    ---------
    spectrum : LabeledSpectrum
        The labeled spectrum of the original Hamiltonian.

    columns : sequence
        ``(title, eigenvalues, matched)`` per adapted operator, where
        ``eigenvalues`` is its ascending spectrum and ``matched`` the set of
        indices of levels that have a partner in the target sector. Matched
        levels are rendered in bold.

    highlighted : set
        Original levels rendered in bold, usually the target sector.

    Returns
    -------
    lines : list

    """
    header = ['Level', '(N, S)', 'Original'] + [
        title for title, _, _ in columns]
    rows = []
    for level, energy in enumerate(spectrum.energies):
        n, s = spectrum.label(level)
        cells = [str(level), '({0}, {1:.1f})'.format(n, s),
                 ENERGY_FORMAT.format(energy)]
        emphasis = [False, False, level in highlighted]
        for _, eigenvalues, matched in columns:
            cells.append(ENERGY_FORMAT.format(eigenvalues[level]))
            emphasis.append(level in matched)
        rows.append(Row(cells, emphasis))
    return simple_table(header, rows)


def term_count_table(grid, methods=('PHP', 'L', 'Reflection')):
    """ Term counts of adapted operators, one row per symmetry target.

    Arguments
    ---------
    grid : list
        ``(label, counts)`` pairs where ``counts`` follows ``methods``.

    """
    header = ['Target'] + list(methods)
    rows = [Row([label] + [str(count) for count in counts])
            for label, counts in grid]
    return simple_table(header, rows)
