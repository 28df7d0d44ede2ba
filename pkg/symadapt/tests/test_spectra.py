import unittest
from unittest import mock

import numpy
from scipy.linalg import eigh

from symadapt.errors import (
    CapacityError, ContractError, LabelingError, MismatchError)
from symadapt.fermion import (
    build_hamiltonian, build_number_operator, build_s2_operator)
from symadapt.mapping import map_operator
from symadapt.pauli import PauliSum, to_matrix
from symadapt.spectra import (
    degeneracy_groups, diagonalize, label_spectrum, simultaneous_eigenbasis)
from symadapt.tests._molecules import h2_integrals


class TestDiagonalize(unittest.TestCase):

    def test_single_qubit(self):
        # given
        z = PauliSum.from_labels(1, [('Z0', 1.0)])

        # when
        values, vectors = diagonalize(z)

        # then
        numpy.testing.assert_allclose(values, [-1.0, 1.0])
        numpy.testing.assert_allclose(abs(vectors), [[0.0, 1.0], [1.0, 0.0]])

    def test_errors(self):
        with self.assertRaises(ContractError):
            diagonalize(PauliSum.from_labels(1, [('Z0', 1j)]))
        with self.assertRaises(CapacityError):
            diagonalize(PauliSum.identity(3), dense_limit=2)

    def test_degeneracy_groups(self):
        # given
        values = [0.0, 1e-12, 1.0, 1.0, 2.0]

        # when/then
        self.assertEqual(degeneracy_groups(values).tolist(), [0, 0, 1, 1, 2])
        self.assertEqual(degeneracy_groups([]).tolist(), [])

    def test_simultaneous_eigenbasis(self):
        # given
        h = numpy.eye(4)
        a = to_matrix(PauliSum.from_labels(
            2, [('X0 X1', 1.0), ('Y0 Y1', 1.0)]))

        # when
        energies, vectors, groups = simultaneous_eigenbasis(h, [a])

        # then
        numpy.testing.assert_allclose(energies, numpy.ones(4))
        self.assertEqual(groups.tolist(), [0, 0, 0, 0])
        restricted = vectors.conj().T.dot(a).dot(vectors)
        numpy.testing.assert_allclose(
            restricted, numpy.diag(numpy.diag(restricted)), atol=1e-12)

    def test_simultaneous_eigenbasis_complex_symmetry(self):
        # given
        h = numpy.eye(2)
        y = to_matrix(PauliSum.from_labels(1, [('Y0', 1.0)]))

        # when
        energies, vectors, _ = simultaneous_eigenbasis(h, [y])

        # then
        numpy.testing.assert_allclose(
            vectors.conj().T.dot(vectors), numpy.eye(2), atol=1e-12)
        values = numpy.real(numpy.diag(vectors.conj().T.dot(y).dot(vectors)))
        numpy.testing.assert_allclose(values, [-1.0, 1.0], atol=1e-12)


class TestLabelSpectrum(unittest.TestCase):

    def setUp(self):
        self.integrals = h2_integrals()
        hamiltonian = build_hamiltonian(self.integrals)
        self.h = map_operator(hamiltonian, 'jordan_wigner')
        self.number = map_operator(build_number_operator(4), 'jordan_wigner')
        self.s2 = map_operator(build_s2_operator(4), 'jordan_wigner')

    def test_h2(self):
        # given
        h, g = self.integrals.h, self.integrals.g
        h11 = 2.0 * h[0, 0] + g[0, 0, 0, 0]
        h22 = 2.0 * h[1, 1] + g[1, 1, 1, 1]
        coupling = g[0, 1, 1, 0]
        ground = 0.5 * (h11 + h22) - numpy.sqrt(
            0.25 * (h11 - h22) ** 2 + coupling ** 2)

        # when
        spectrum = label_spectrum(self.h, self.number, self.s2)

        # then
        self.assertEqual(len(spectrum), 16)
        self.assertAlmostEqual(spectrum.energies[0], ground)
        self.assertEqual(spectrum.label(0), (2, 0.0))
        self.assertEqual(spectrum.counts_by_n(4), (1, 4, 6, 4, 1))
        self.assertEqual(spectrum.counts_by_s(4), (5, 8, 3))
        self.assertTrue(numpy.all(numpy.diff(spectrum.energies) >= 0.0))

    def test_degenerate_levels_get_pure_labels(self):
        # when
        spectrum = label_spectrum(self.h, self.number, self.s2)

        # then
        numpy.testing.assert_allclose(
            spectrum.n_values, spectrum.n_labels, atol=1e-8)
        numpy.testing.assert_allclose(
            spectrum.s_values, spectrum.s_labels, atol=1e-8)

    def test_labels_do_not_depend_on_degenerate_basis(self):
        # given
        rng = numpy.random.default_rng(11)
        h_matrix = to_matrix(self.h)

        def scrambled_eigh(matrix):
            values, vectors = eigh(matrix)
            if matrix is not h_matrix:
                return values, vectors
            vectors = vectors.astype(complex)
            groups = degeneracy_groups(values)
            for group in numpy.unique(groups):
                columns = numpy.nonzero(groups == group)[0]
                size = len(columns)
                mixing, _ = numpy.linalg.qr(
                    rng.normal(size=(size, size)) +
                    1j * rng.normal(size=(size, size)))
                vectors[:, columns] = vectors[:, columns].dot(mixing)
            return values, vectors

        expected = label_spectrum(self.h, self.number, self.s2)

        # when
        with mock.patch(
                'symadapt.spectra.labels.to_matrix',
                side_effect=lambda a, **kwargs: (
                    h_matrix if a is self.h else to_matrix(a, **kwargs))):
            with mock.patch(
                    'symadapt.spectra.diagonalize.eigh',
                    side_effect=scrambled_eigh):
                spectrum = label_spectrum(self.h, self.number, self.s2)

        # then
        self.assertEqual(
            [spectrum.label(level) for level in range(len(spectrum))],
            [expected.label(level) for level in range(len(expected))])
        numpy.testing.assert_allclose(
            spectrum.n_values, spectrum.n_labels, atol=1e-8)
        numpy.testing.assert_allclose(
            spectrum.s_values, spectrum.s_labels, atol=1e-8)

    def test_non_commuting(self):
        # given
        h = PauliSum.from_labels(4, [('X0', 1.0)])

        # when/then
        with self.assertRaises(ContractError):
            label_spectrum(h, self.number, self.s2)

    def test_unresolved_labels(self):
        with self.assertRaises(LabelingError):
            label_spectrum(self.h, 0.5 * self.number, self.s2)


if __name__ == '__main__':
    unittest.main()
