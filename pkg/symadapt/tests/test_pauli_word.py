import itertools
import unittest

import numpy

from symadapt.errors import DimensionError, ParseError
from symadapt.pauli import PauliSum, PauliWord, to_matrix, word_multiply


class TestPauliWord(unittest.TestCase):

    def test_from_label(self):
        # when
        word, phase = PauliWord.from_label('X0 Y1 Z2', 4)

        # then
        self.assertEqual(word, PauliWord(4, 0b011, 0b110))
        self.assertEqual(phase, 1j)
        self.assertEqual(word.n_y, 1)
        self.assertEqual(word.label, 'X0 Y1 Z2')

    def test_identity_label(self):
        # when
        word, phase = PauliWord.from_label('I', 3)

        # then
        self.assertEqual(word, PauliWord.identity(3))
        self.assertEqual(phase, 1)
        self.assertEqual(word.label, 'I')

    def test_bad_labels(self):
        for label in ('X0 X0', 'Q1', 'X', 'Z1 Y1'):
            with self.assertRaises(ParseError):
                PauliWord.from_label(label, 3)
        with self.assertRaises(DimensionError):
            PauliWord.from_label('Z5', 3)

    def test_masks_must_fit(self):
        with self.assertRaises(DimensionError):
            PauliWord(2, 0b100, 0)
        with self.assertRaises(DimensionError):
            PauliWord(0)
        with self.assertRaises(DimensionError):
            PauliWord(33)

    def test_single(self):
        self.assertEqual(PauliWord.single(3, 1, 'X'), PauliWord(3, 2, 0))
        self.assertEqual(PauliWord.single(3, 2, 'Z'), PauliWord(3, 0, 4))
        with self.assertRaises(ValueError):
            PauliWord.single(3, 0, 'Y')

    def test_xyz_phase(self):
        # given
        word, phase = PauliWord.from_label('Y0 Y1', 2)

        # then
        self.assertEqual(word.xyz_phase, -1)
        self.assertEqual(phase * word.xyz_phase, 1)


class TestWordMultiply(unittest.TestCase):

    def test_sign_from_z_left_of_x(self):
        # given
        x = PauliWord.single(1, 0, 'X')
        z = PauliWord.single(1, 0, 'Z')

        # when
        xz, xz_phase = word_multiply(x, z)
        zx, zx_phase = word_multiply(z, x)

        # then
        self.assertEqual(xz, PauliWord(1, 1, 1))
        self.assertEqual(zx, PauliWord(1, 1, 1))
        self.assertEqual(xz_phase, 1)
        self.assertEqual(zx_phase, -1)

    def test_disjoint_words_commute(self):
        # given
        a, _ = PauliWord.from_label('X0 Z1', 3)
        b, _ = PauliWord.from_label('Z2', 3)

        # when
        word, phase = word_multiply(a, b)

        # then
        self.assertEqual(word.label, 'X0 Z1 Z2')
        self.assertEqual(phase, 1)

    def test_square_is_identity(self):
        # given
        a = PauliWord(3, 0b101, 0b110)

        # when
        word, phase = word_multiply(a, a)

        # then
        self.assertEqual(word, PauliWord.identity(3))
        # qubit 2 carries both an X and a Z factor
        self.assertEqual(phase, -1)

    def test_dimension_mismatch(self):
        with self.assertRaises(DimensionError):
            word_multiply(PauliWord.identity(2), PauliWord.identity(3))

    def test_agrees_with_dense_product(self):
        # given
        rng = numpy.random.default_rng(3)

        for _ in range(20):
            a = PauliWord(8, *rng.integers(0, 256, 2))
            b = PauliWord(8, *rng.integers(0, 256, 2))

            # when
            word, phase = word_multiply(a, b)

            # then
            expected = dense(a).dot(dense(b))
            numpy.testing.assert_allclose(
                phase * dense(word), expected, atol=1e-12)

    def test_associative_on_two_qubits(self):
        # given
        words = [PauliWord(2, x, z) for x in range(4) for z in range(4)]

        for a, b, c in itertools.product(words, repeat=3):
            # when
            ab, ab_phase = word_multiply(a, b)
            left, left_phase = word_multiply(ab, c)
            bc, bc_phase = word_multiply(b, c)
            right, right_phase = word_multiply(a, bc)

            # then
            self.assertEqual(left, right)
            self.assertEqual(ab_phase * left_phase, bc_phase * right_phase)


def dense(word):
    return to_matrix(PauliSum.from_terms(word.n_qubits, [(word, 1.0)]))


if __name__ == '__main__':
    unittest.main()
