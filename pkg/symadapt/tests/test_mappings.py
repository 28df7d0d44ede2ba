import unittest
from unittest import mock

import numpy
from scipy.linalg import eigvalsh
from scipy.special import comb

from symadapt.errors import ContractError
from symadapt.fermion import (
    FermionOperator, build_hamiltonian, build_number_operator,
    build_s2_operator)
from symadapt.mapping import (
    MappingKind, ladder_images, map_operator, verify_isospectral)
from symadapt.pauli import PauliSum, sum_add, sum_multiply, to_matrix
from symadapt.tests._molecules import h2_integrals


class TestLadderImages(unittest.TestCase):

    def test_anticommutation(self):
        for kind in MappingKind:
            # given
            images = ladder_images(kind, 4)
            identity = numpy.eye(16)

            for i in range(4):
                for j in range(4):
                    # when
                    a = images[(i, False)]
                    b = images[(j, True)]
                    anticommutator = sum_add(
                        sum_multiply(a, b), sum_multiply(b, a))
                    same = sum_add(
                        sum_multiply(a, images[(j, False)]),
                        sum_multiply(images[(j, False)], a))

                    # then
                    expected = identity if i == j else 0.0 * identity
                    numpy.testing.assert_allclose(
                        to_matrix(anticommutator), expected, atol=1e-12)
                    self.assertEqual(same.term_count, 0)

    def test_adjoint_pairs(self):
        for kind in MappingKind:
            # given
            images = ladder_images(kind, 5)

            for mode in range(5):
                # when
                adjoint = images[(mode, True)].adjoint()

                # then
                numpy.testing.assert_allclose(
                    to_matrix(adjoint), to_matrix(images[(mode, False)]))


class TestMapOperator(unittest.TestCase):

    def test_occupation_of_one_mode(self):
        # given
        op = FermionOperator(1, [(((0, True), (0, False)), 1.0)])

        # when
        image = map_operator(op, 'jw')

        # then
        terms = image.xyz_terms()
        self.assertEqual([label for label, _ in terms], ['I', 'Z0'])
        self.assertAlmostEqual(terms[0][1], 0.5)
        self.assertAlmostEqual(terms[1][1], -0.5)

    def test_number_operator_term_counts(self):
        for kind in MappingKind:
            for n_modes in (4, 6, 8):
                # when
                image = map_operator(build_number_operator(n_modes), kind)

                # then
                self.assertEqual(image.term_count, n_modes + 1)

    def test_total_spin_term_counts(self):
        # when
        parity = map_operator(build_s2_operator(6), 'parity')
        bravyi_kitaev = map_operator(build_s2_operator(8), 'bk')

        # then
        self.assertEqual(parity.term_count, 40)
        self.assertEqual(bravyi_kitaev.term_count, 77)

    def test_total_spin_sector_sizes(self):
        for n_modes, kind, expected in (
                (6, 'parity', [14, 28, 18, 4]),
                (8, 'bk', [42, 96, 81, 32, 5])):
            # given
            image = map_operator(build_s2_operator(n_modes), kind)

            # when
            values = eigvalsh(to_matrix(image))
            doubled = numpy.rint(
                numpy.sqrt(1.0 + 4.0 * numpy.clip(values, 0.0, None)) - 1.0)

            # then
            counts = numpy.bincount(doubled.astype(int))
            self.assertEqual(counts.tolist(), expected)

    def test_number_operator_spectrum(self):
        for kind in MappingKind:
            # given
            image = map_operator(build_number_operator(5), kind)

            # when
            values = numpy.rint(eigvalsh(to_matrix(image))).astype(int)

            # then
            counts = numpy.bincount(values, minlength=6)
            self.assertEqual(
                counts.tolist(), [int(comb(5, k)) for k in range(6)])

    def test_identity_and_empty(self):
        # when
        image = map_operator(FermionOperator.identity(3, 2.5), 'parity')
        empty = map_operator(FermionOperator(3), 'parity')

        # then
        self.assertEqual(image, PauliSum.identity(3, 2.5))
        self.assertEqual(empty.term_count, 0)
        self.assertEqual(empty.n_qubits, 3)

    def test_batching(self):
        # given
        hamiltonian = build_hamiltonian(h2_integrals())
        expected = map_operator(hamiltonian, 'bk')

        # when
        with mock.patch('symadapt.mapping.mappings.BATCH_SIZE', 3):
            batched = map_operator(hamiltonian, 'bk')

        # then
        numpy.testing.assert_array_equal(batched.x, expected.x)
        numpy.testing.assert_array_equal(batched.z, expected.z)
        numpy.testing.assert_allclose(
            batched.coeffs, expected.coeffs, atol=1e-14)

    def test_hamiltonian_is_hermitian(self):
        # given
        hamiltonian = build_hamiltonian(h2_integrals())

        for kind in MappingKind:
            # when
            image = map_operator(hamiltonian, kind)

            # then
            self.assertEqual(image.n_qubits, 4)
            self.assertTrue(image.is_hermitian(tol=1e-12))


class TestVerifyIsospectral(unittest.TestCase):

    def test_h2(self):
        # given
        hamiltonian = build_hamiltonian(h2_integrals())

        # when
        report = verify_isospectral(hamiltonian, list(MappingKind))

        # then
        self.assertTrue(report.isospectral())
        self.assertLess(report.max_deviation, 1e-10)
        self.assertEqual(len(report.spectra), 3)

    def test_non_hermitian(self):
        # given
        hopping = FermionOperator(2, [(((1, True), (0, False)), 1.0)])

        # when/then
        with self.assertRaises(ContractError):
            verify_isospectral(hopping, ['jw'])


if __name__ == '__main__':
    unittest.main()
