import unittest

import numpy

from symadapt.errors import ContractError, UsageError
from symadapt.mapping import (
    MappingKind, encoding_matrix, gf2_inverse, ladder_sets)


class TestMappingKind(unittest.TestCase):

    def test_parse(self):
        self.assertIs(MappingKind.parse('jw'), MappingKind.jordan_wigner)
        self.assertIs(MappingKind.parse('BK'), MappingKind.bravyi_kitaev)
        self.assertIs(
            MappingKind.parse('Bravyi-Kitaev'), MappingKind.bravyi_kitaev)
        self.assertIs(
            MappingKind.parse(MappingKind.parity), MappingKind.parity)
        with self.assertRaises(UsageError):
            MappingKind.parse('ternary')


class TestEncodingMatrix(unittest.TestCase):

    def test_jordan_wigner(self):
        numpy.testing.assert_array_equal(
            encoding_matrix('jordan_wigner', 3), numpy.eye(3))

    def test_parity(self):
        numpy.testing.assert_array_equal(
            encoding_matrix('parity', 3),
            [[1, 0, 0], [1, 1, 0], [1, 1, 1]])

    def test_bravyi_kitaev(self):
        numpy.testing.assert_array_equal(
            encoding_matrix('bk', 4),
            [[1, 0, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, 1]])

    def test_inverse(self):
        for kind in MappingKind:
            # given
            matrix = encoding_matrix(kind, 8)

            # when
            inverse = gf2_inverse(matrix)

            # then
            numpy.testing.assert_array_equal(
                matrix.astype(int).dot(inverse) % 2, numpy.eye(8))

    def test_singular(self):
        with self.assertRaises(ContractError):
            gf2_inverse(numpy.ones((2, 2), dtype=numpy.int8))


class TestLadderSets(unittest.TestCase):

    def assertSets(self, sets, update, parity, flip):
        self.assertEqual(sets.update, frozenset(update))
        self.assertEqual(sets.parity, frozenset(parity))
        self.assertEqual(sets.flip, frozenset(flip))

    def test_jordan_wigner(self):
        # when
        sets = ladder_sets('jw', 4, index=2)

        # then
        self.assertSets(sets, [], [0, 1], [])
        self.assertEqual(sets.remainder, frozenset([0, 1]))

    def test_parity(self):
        # when
        sets = ladder_sets('parity', 4, index=2)

        # then
        self.assertSets(sets, [3], [1], [1])
        self.assertEqual(sets.remainder, frozenset())

    def test_bravyi_kitaev(self):
        # when
        sets = ladder_sets('bravyi_kitaev', 4)

        # then
        self.assertEqual(len(sets), 4)
        self.assertSets(sets[0], [1, 3], [], [])
        self.assertSets(sets[1], [3], [0], [0])
        self.assertSets(sets[2], [3], [1], [])
        self.assertSets(sets[3], [], [1, 2], [1, 2])
        self.assertEqual(sets[2].remainder, frozenset([1]))

    def test_sets_exclude_the_mode(self):
        for kind in MappingKind:
            for sets in ladder_sets(kind, 9):
                # then
                self.assertNotIn(sets.mode, sets.update | sets.parity)
                self.assertNotIn(sets.mode, sets.flip)
                self.assertFalse(sets.update & sets.parity)


if __name__ == '__main__':
    unittest.main()
