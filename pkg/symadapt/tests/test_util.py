import unittest

import numpy

from symadapt.util import (
    basis_indices, format_float, parity, popcount, sign_of, spin_from_s2)


class TestBitFunctions(unittest.TestCase):

    def test_parity(self):
        # given
        values = numpy.array([0, 1, 3, 7, 2 ** 40 + 1], dtype=numpy.uint64)

        # when
        result = parity(values)

        # then
        self.assertEqual(result.tolist(), [0, 1, 0, 1, 0])

    def test_sign_of(self):
        # given
        values = numpy.array([0, 1, 6, 7], dtype=numpy.uint64)

        # when/then
        self.assertEqual(sign_of(values).tolist(), [1, -1, 1, -1])

    def test_popcount(self):
        self.assertEqual(popcount(0), 0)
        self.assertEqual(popcount(0b101101), 4)

    def test_basis_indices(self):
        # when
        index = basis_indices(3)

        # then
        self.assertEqual(index.dtype, numpy.uint64)
        self.assertEqual(index.tolist(), list(range(8)))


class TestRenderFunctions(unittest.TestCase):

    def test_format_float(self):
        self.assertEqual(format_float(0.5), '0.5')
        self.assertEqual(format_float(1.0 / 3.0), '0.33333333333333331')
        self.assertEqual(format_float(-0.0), '0')
        self.assertEqual(format_float(2), '2')

    def test_spin_from_s2(self):
        self.assertAlmostEqual(spin_from_s2(0.0), 0.0)
        self.assertAlmostEqual(spin_from_s2(0.75), 0.5)
        self.assertAlmostEqual(spin_from_s2(2.0), 1.0)
        self.assertAlmostEqual(spin_from_s2(3.75), 1.5)
        # round-off below zero is clipped
        self.assertAlmostEqual(spin_from_s2(-1e-14), 0.0)


if __name__ == '__main__':
    unittest.main()
