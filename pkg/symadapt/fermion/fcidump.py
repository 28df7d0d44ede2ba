# -*- coding: utf-8 -*-
# -----------------------------------------------------------------------------
#  file: fcidump.py
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
# -----------------------------------------------------------------------------
""" Reading and writing integrals in the Molpro FCIDUMP format.

The file starts with a namelist header::

     &FCI NORB=   3,NELEC= 2,MS2=0,
      ORBSYM=1,1,1,
      ISYM=1,
     &END

followed by one integral per line as ``value i j k l`` with one-based
orbital indices. Four non-zero indices give the chemist-notation
integral ``(ij|kl)``, ``i j 0 0`` gives ``h_ij`` and ``0 0 0 0`` the
nuclear repulsion energy. The optional header key ``ECORE`` carries the
electronic energy of frozen core orbitals.

"""
import logging
import re

import numpy

from symadapt.errors import ParseError
from symadapt.fermion.integrals import IntegralSet
from symadapt.util import format_float

logger = logging.getLogger(__name__)

#-----------------------------------------------------------------------------
#  Pre-compiled regexes
#-----------------------------------------------------------------------------
header_start_regex = re.compile(r'\s*&FCI\b', re.IGNORECASE)
header_end_regex = re.compile(r'(&END\b|/)\s*$', re.IGNORECASE)
assignment_regex = re.compile(r'([A-Za-z_][A-Za-z0-9_]*)\s*=')
fortran_exponent_regex = re.compile(r'[dD]')

DUPLICATE_TOLERANCE = 1e-10


class FcidumpReader(object):
    """ Line based FCIDUMP parser.

    The reader walks the text with a current line index in the manner
    of a docstring renderer: the header block is consumed first, then
    every remaining line is read as one integral.

    Attributes
    ----------
    lines : list
        The input text as a list of lines.

    index : int
        The zero-based number of the line that is currently processed.

    """

    def __init__(self, text):
        try:
            self.lines = text.splitlines()
        except AttributeError:
            self.lines = list(text)
        self.index = 0

    def parse(self):
        """ Parse the whole text.

        Returns
        -------
        integrals : IntegralSet

        Raises
        ------
        ParseError :
            On a malformed header, an index out of range or two entries
            that assign conflicting values to the same integral.

        """
        self.index = 0
        header = self.parse_header()
        norb = header['NORB']
        self.h = numpy.zeros((norb, norb))
        self.g = numpy.zeros((norb,) * 4)
        self.h_seen = numpy.zeros((norb, norb), dtype=bool)
        self.g_seen = numpy.zeros((norb,) * 4, dtype=bool)
        self.v_nn = None
        self.v_nn_line = None
        while not self.eod:
            line_number = self.index + 1
            line = self.read()
            if is_empty(line):
                continue
            self._parse_entry(line, line_number, norb)
        orbsym = header.get('ORBSYM', ())
        if orbsym and len(orbsym) != norb:
            raise ParseError(
                'ORBSYM has {0} entries for NORB={1}'.format(
                    len(orbsym), norb), header['_line'])
        return IntegralSet(
            self.h, self.g,
            n_electrons=header['NELEC'],
            v_nn=0.0 if self.v_nn is None else self.v_nn,
            ms2=header.get('MS2', 0),
            orbsym=orbsym,
            isym=header.get('ISYM', 1),
            e_core=header.get('ECORE', 0.0))

    def parse_header(self):
        """ Consume the namelist header and return its keys.

        """
        self.seek_to_next_non_empty_line()
        start = self.index + 1
        if self.eod or header_start_regex.match(self.peek()) is None:
            raise ParseError('expected an &FCI namelist header', start)
        block = []
        while True:
            if self.eod:
                raise ParseError('unterminated &FCI header', start)
            line = self.read()
            block.append(line)
            if header_end_regex.search(line.strip()):
                break
        text = ' '.join(block)
        text = header_start_regex.sub('', text, count=1)
        text = header_end_regex.sub('', text.strip())
        return _parse_namelist(text, start)

    def seek_to_next_non_empty_line(self):
        for line in self.lines[self.index:]:
            if not is_empty(line):
                break
            self.index += 1

    def peek(self, ahead=0):
        """ Peek ahead a number of lines, ``''`` past the end.

        """
        position = self.index + ahead
        try:
            line = self.lines[position]
        except IndexError:
            line = ''
        return line

    def read(self):
        """ Return the next line and advance the index.

        """
        line = self.lines[self.index]
        self.index += 1
        return line

    @property
    def eod(self):
        """ End of data.

        """
        return self.index >= len(self.lines)

    def _parse_entry(self, line, line_number, norb):
        fields = line.split()
        if len(fields) != 5:
            raise ParseError(
                'expected "value i j k l", got {0!r}'.format(line.strip()),
                line_number)
        try:
            value = float(fortran_exponent_regex.sub('e', fields[0]))
            i, j, k, l = [int(field) for field in fields[1:]]
        except ValueError:
            raise ParseError(
                'cannot read {0!r}'.format(line.strip()), line_number)
        for index in (i, j, k, l):
            if not 0 <= index <= norb:
                raise ParseError(
                    'orbital index {0} out of range 0..{1}'.format(
                        index, norb), line_number)
        if i and j and k and l:
            self._assign(
                self.g, self.g_seen, _chemist_images(i - 1, j - 1, k - 1, l - 1),
                value, line_number)
        elif i and j and not (k or l):
            self._assign(
                self.h, self.h_seen, set([(i - 1, j - 1), (j - 1, i - 1)]),
                value, line_number)
        elif not (i or j or k or l):
            if self.v_nn is not None and \
                    abs(self.v_nn - value) > DUPLICATE_TOLERANCE:
                raise ParseError(
                    'conflicting core energy, first given on line '
                    '{0}'.format(self.v_nn_line), line_number)
            self.v_nn = value
            self.v_nn_line = line_number
        elif i and not (j or k or l):
            logger.debug('skipping orbital energy on line %d', line_number)
        else:
            raise ParseError(
                'unsupported index pattern {0} {1} {2} {3}'.format(
                    i, j, k, l), line_number)

    def _assign(self, array, seen, images, value, line_number):
        for image in images:
            if seen[image] and abs(array[image] - value) > \
                    DUPLICATE_TOLERANCE:
                raise ParseError(
                    'conflicting duplicate entry for {0}'.format(
                        tuple(index + 1 for index in image)), line_number)
        for image in images:
            array[image] = value
            seen[image] = True


def load_fcidump(text):
    """ Parse FCIDUMP text into an :class:`~.IntegralSet`.

    """
    return FcidumpReader(text).parse()


def read_fcidump(filename):
    with open(filename) as handle:
        return load_fcidump(handle.read())


def dump_fcidump(integrals, tol=1e-15):
    """ Render an :class:`~.IntegralSet` in the FCIDUMP format.

    Only the symmetry-unique integrals are written: ``(ij|kl)`` with
    ``i >= j``, ``k >= l`` and ``ij >= kl``, then ``h_ij`` with
    ``i >= j``, then the nuclear repulsion energy.

    """
    n = integrals.n_orbitals
    orbsym = integrals.orbsym if integrals.orbsym else (1,) * n
    lines = [
        ' &FCI NORB={0:4d},NELEC={1:2d},MS2={2:d},'.format(
            n, integrals.n_electrons, integrals.ms2),
        '  ORBSYM={0},'.format(','.join(str(x) for x in orbsym)),
        '  ISYM={0:d},'.format(integrals.isym)]
    if integrals.e_core != 0.0:
        lines.append('  ECORE={0},'.format(format_float(integrals.e_core)))
    lines.append(' &END')
    entry = '{0} {1:4d} {2:4d} {3:4d} {4:4d}'
    g = integrals.g
    for i in range(n):
        for j in range(i + 1):
            for k in range(i + 1):
                for l in range(k + 1):
                    if i * (i + 1) // 2 + j < k * (k + 1) // 2 + l:
                        continue
                    if abs(g[i, j, k, l]) > tol:
                        lines.append(entry.format(
                            format_float(g[i, j, k, l]),
                            i + 1, j + 1, k + 1, l + 1))
    for i in range(n):
        for j in range(i + 1):
            if abs(integrals.h[i, j]) > tol:
                lines.append(entry.format(
                    format_float(integrals.h[i, j]), i + 1, j + 1, 0, 0))
    lines.append(entry.format(format_float(integrals.v_nn), 0, 0, 0, 0))
    return '\n'.join(lines) + '\n'


#------------------------------------------------------------------------------
#  Functions to detect line type
#------------------------------------------------------------------------------

def is_empty(line):
    return not line.strip()


#------------------------------------------------------------------------------
#  Private functions
#------------------------------------------------------------------------------

def _chemist_images(i, j, k, l):
    return set([
        (i, j, k, l), (j, i, k, l), (i, j, l, k), (j, i, l, k),
        (k, l, i, j), (l, k, i, j), (k, l, j, i), (l, k, j, i)])


def _parse_namelist(text, line_number):
    """ Split ``KEY=value, KEY=v1,v2,...`` into a dictionary.

    """
    matches = list(assignment_regex.finditer(text))
    raw = {}
    for position, match in enumerate(matches):
        stop = matches[position + 1].start() \
            if position + 1 < len(matches) else len(text)
        values = [
            value for value in re.split(r'[,\s]+', text[match.end():stop])
            if value != '']
        raw[match.group(1).upper()] = values
    header = {'_line': line_number}
    try:
        for key in ('NORB', 'NELEC'):
            if key not in raw or len(raw[key]) != 1:
                raise ParseError(
                    'header needs exactly one {0} value'.format(key),
                    line_number)
            header[key] = int(raw[key][0])
        for key in ('MS2', 'ISYM'):
            if key in raw:
                header[key] = int(raw[key][0])
        if 'ORBSYM' in raw:
            header['ORBSYM'] = tuple(int(value) for value in raw['ORBSYM'])
        if 'ECORE' in raw:
            header['ECORE'] = float(
                fortran_exponent_regex.sub('e', raw['ECORE'][0]))
    except (ValueError, IndexError):
        raise ParseError('malformed header value', line_number)
    if header['NORB'] < 1:
        raise ParseError('NORB must be positive', line_number)
    if header['NELEC'] < 0:
        raise ParseError('NELEC must be non-negative', line_number)
    ignored = sorted(set(raw) - set(header))
    if ignored:
        logger.debug('ignoring header keys %s', ', '.join(ignored))
    return header
