import unittest

import numpy

from symadapt.errors import ParseError
from symadapt.fermion import FcidumpReader, dump_fcidump, load_fcidump
from symadapt.tests._molecules import H2_FCIDUMP

HEADER = """\
 &FCI NORB=2,NELEC=2,MS2=0,
  ORBSYM=1,1,
  ISYM=1,
 &END
"""


class TestLoadFcidump(unittest.TestCase):

    def setUp(self):
        self.maxDiff = None

    def test_h2(self):
        # when
        integrals = load_fcidump(H2_FCIDUMP)

        # then
        self.assertEqual(integrals.n_orbitals, 2)
        self.assertEqual(integrals.n_spin_orbitals, 4)
        self.assertEqual(integrals.n_electrons, 2)
        self.assertEqual(integrals.orbsym, (1, 5))
        self.assertEqual(integrals.e_core, 0.0)
        self.assertAlmostEqual(integrals.v_nn, 0.7137539936)
        self.assertAlmostEqual(integrals.h[0, 0], -1.2524635735)
        self.assertEqual(integrals.h[0, 1], 0.0)
        g = integrals.g
        for index in ((1, 0, 1, 0), (0, 1, 1, 0), (1, 0, 0, 1), (0, 1, 0, 1)):
            self.assertAlmostEqual(g[index], 0.1812095049)
        self.assertAlmostEqual(g[0, 0, 1, 1], 0.6634680385)
        self.assertAlmostEqual(g[1, 1, 0, 0], 0.6634680385)

    def test_header_variants(self):
        # given
        text = (
            ' &FCI NORB=1, NELEC=2, ECORE=-1.5D0 /\n'
            ' 0.5D-01 1 1 0 0\n'
            ' 2.0 1 0 0 0\n'
            '\n')

        # when
        integrals = load_fcidump(text)

        # then
        self.assertEqual(integrals.e_core, -1.5)
        self.assertAlmostEqual(integrals.h[0, 0], 0.05)
        self.assertEqual(integrals.v_nn, 0.0)
        self.assertEqual(integrals.ms2, 0)

    def test_reader_cursor(self):
        # given
        reader = FcidumpReader(['', ' &FCI NORB=1,NELEC=0', ' &END'])

        # when
        reader.seek_to_next_non_empty_line()

        # then
        self.assertEqual(reader.index, 1)
        self.assertEqual(reader.peek(), ' &FCI NORB=1,NELEC=0')
        self.assertEqual(reader.peek(ahead=5), '')
        self.assertFalse(reader.eod)

    def test_round_trip(self):
        # given
        integrals = load_fcidump(H2_FCIDUMP)

        # when
        text = dump_fcidump(integrals)
        reloaded = load_fcidump(text)

        # then
        numpy.testing.assert_array_equal(reloaded.h, integrals.h)
        numpy.testing.assert_array_equal(reloaded.g, integrals.g)
        self.assertEqual(reloaded.v_nn, integrals.v_nn)
        self.assertEqual(reloaded.orbsym, integrals.orbsym)
        self.assertEqual(dump_fcidump(reloaded), text)


class TestFcidumpErrors(unittest.TestCase):

    def assertParseError(self, text, line):
        with self.assertRaises(ParseError) as context:
            load_fcidump(text)
        self.assertEqual(context.exception.line, line)

    def test_missing_header(self):
        self.assertParseError(' 0.5 1 1 0 0\n', 1)

    def test_unterminated_header(self):
        self.assertParseError(' &FCI NORB=2,NELEC=2,\n  ISYM=1,\n', 1)

    def test_missing_norb(self):
        self.assertParseError(' &FCI NELEC=2 &END\n', 1)

    def test_index_out_of_range(self):
        self.assertParseError(HEADER + ' 0.5 3 1 0 0\n', 5)

    def test_wrong_field_count(self):
        self.assertParseError(HEADER + ' 0.5 1 1 0\n', 5)

    def test_bad_number(self):
        self.assertParseError(HEADER + ' abc 1 1 0 0\n', 5)

    def test_conflicting_duplicates(self):
        self.assertParseError(
            HEADER + ' 0.5 2 1 2 1\n 0.6 1 2 1 2\n', 6)
        self.assertParseError(
            HEADER + ' 0.7 0 0 0 0\n 0.8 0 0 0 0\n', 6)

    def test_consistent_duplicates(self):
        # when
        integrals = load_fcidump(HEADER + ' 0.5 2 1 0 0\n 0.5 1 2 0 0\n')

        # then
        self.assertEqual(integrals.h[1, 0], 0.5)

    def test_orbsym_length(self):
        self.assertParseError(
            ' &FCI NORB=2,NELEC=2,ORBSYM=1, &END\n', 1)


if __name__ == '__main__':
    unittest.main()
