import unittest

import numpy
from scipy.linalg import eigvalsh

from symadapt.adapt import (
    AdaptationMethod, lowdin_projector, number_spec,
    positive_non_target_levels, project_hamiltonian, reflect_operator,
    reflect_singlet, shift_operator, spin_spec, sum_over_states,
    truncated_projector)
from symadapt.errors import ContractError, DimensionError, UsageError
from symadapt.fermion import (
    build_hamiltonian, build_number_operator, build_s2_operator)
from symadapt.mapping import map_operator
from symadapt.pauli import PauliSum, to_matrix
from symadapt.tests._molecules import h2_integrals


class H2Operators(object):
    """ Qubit operators of the hydrogen molecule in the parity mapping.

    """

    def setUp(self):
        self.maxDiff = None
        integrals = h2_integrals()
        self.h = map_operator(build_hamiltonian(integrals), 'parity')
        self.number = map_operator(build_number_operator(4), 'parity')
        self.s2 = map_operator(build_s2_operator(4), 'parity')
        self.spec = number_spec(self.number, 4, 2)
        self.h_matrix = to_matrix(self.h)
        self.n_matrix = to_matrix(self.number)
        self.s2_matrix = to_matrix(self.s2)
        self.deviation = self.n_matrix - 2.0 * numpy.eye(16)


class TestAdaptationMethod(unittest.TestCase):

    def test_parse(self):
        self.assertIs(AdaptationMethod.parse('php'),
                      AdaptationMethod.lowdin_PHP)
        self.assertIs(AdaptationMethod.parse('HP'), AdaptationMethod.lowdin_HP)
        self.assertIs(AdaptationMethod.parse('reflect-singlet'),
                      AdaptationMethod.reflection_singlet)
        self.assertIs(AdaptationMethod.parse('sum_over_states'),
                      AdaptationMethod.sum_over_states)
        self.assertIs(AdaptationMethod.parse(AdaptationMethod.shift),
                      AdaptationMethod.shift)
        with self.assertRaises(UsageError):
            AdaptationMethod.parse('rotate')


class TestProjectors(unittest.TestCase):

    def test_two_qubit_projector(self):
        # given
        number = map_operator(build_number_operator(2), 'jordan_wigner')
        spec = number_spec(number, 2, 1)

        # when
        projector = lowdin_projector(spec)

        # then
        numpy.testing.assert_allclose(
            to_matrix(projector), numpy.diag([0.0, 1.0, 1.0, 0.0]),
            atol=1e-12)
        labels = [label for label, _ in projector.xyz_terms()]
        self.assertEqual(labels, ['I', 'Z0 Z1'])

    def test_idempotent_for_every_target(self):
        # given
        number = map_operator(build_number_operator(4), 'bravyi_kitaev')

        for target in range(5):
            # when
            matrix = to_matrix(lowdin_projector(number_spec(number, 4, target)))

            # then
            numpy.testing.assert_allclose(
                matrix.dot(matrix), matrix, atol=1e-10)
            self.assertAlmostEqual(
                numpy.trace(matrix).real,
                [1, 4, 6, 4, 1][target])

    def test_truncated_projector_is_not_idempotent(self):
        # given
        number = map_operator(build_number_operator(4), 'parity')
        spec = number_spec(number, 4, 2)

        # when
        matrix = to_matrix(truncated_projector(spec))

        # then
        self.assertGreater(
            numpy.linalg.norm(matrix.dot(matrix) - matrix, 2), 1e-6)


class TestProjectHamiltonian(H2Operators, unittest.TestCase):

    def test_php(self):
        # given
        projector = to_matrix(lowdin_projector(self.spec))

        # when
        adapted = project_hamiltonian(self.h, self.spec)

        # then
        self.assertIs(adapted.method, AdaptationMethod.lowdin_PHP)
        numpy.testing.assert_allclose(
            to_matrix(adapted.result),
            projector.dot(self.h_matrix).dot(projector), atol=1e-10)
        self.assertEqual(adapted.term_count, adapted.result.term_count)
        self.assertEqual(adapted.provenance['symmetry'], 'number')
        self.assertEqual(adapted.provenance['target'], 2.0)

    def test_hp_equals_php(self):
        # when
        php = project_hamiltonian(self.h, self.spec, 'PHP')
        hp = project_hamiltonian(self.h, self.spec, 'hp')

        # then
        self.assertIs(hp.method, AdaptationMethod.lowdin_HP)
        numpy.testing.assert_allclose(
            to_matrix(hp.result), to_matrix(php.result), atol=1e-10)

    def test_identity_gives_the_projector(self):
        # when
        adapted = project_hamiltonian(PauliSum.identity(4), self.spec)

        # then
        numpy.testing.assert_allclose(
            to_matrix(adapted.result),
            to_matrix(lowdin_projector(self.spec)), atol=1e-10)

    def test_hp_needs_a_commuting_hamiltonian(self):
        # given
        h = PauliSum.from_labels(4, [('X0', 1.0)])

        # when/then
        with self.assertRaises(ContractError):
            project_hamiltonian(h, self.spec, 'HP')
        with self.assertRaises(UsageError):
            project_hamiltonian(self.h, self.spec, 'PH')
        with self.assertRaises(DimensionError):
            project_hamiltonian(PauliSum.identity(2), self.spec)


class TestShiftOperator(H2Operators, unittest.TestCase):

    def test_penalty(self):
        # when
        adapted = shift_operator(self.h, self.spec, mu=4.0)

        # then
        expected = self.h_matrix + 2.0 * self.deviation.dot(self.deviation)
        numpy.testing.assert_allclose(
            to_matrix(adapted.result), expected, atol=1e-10)
        self.assertEqual(adapted.provenance['mu'], 4.0)

    def test_mu_must_be_positive(self):
        for mu in (0.0, -1.0):
            with self.assertRaises(ContractError):
                shift_operator(self.h, self.spec, mu=mu)


class TestReflectOperator(H2Operators, unittest.TestCase):

    def test_reflection(self):
        # when
        adapted = reflect_operator(self.h, self.spec)

        # then
        square = self.deviation.dot(self.deviation)
        expected = self.h_matrix - self.h_matrix.dot(square) - \
            square.dot(self.h_matrix)
        numpy.testing.assert_allclose(
            to_matrix(adapted.result), expected, atol=1e-10)

    def test_positive_levels_are_reported(self):
        # when
        with self.assertLogs('symadapt.adapt.transforms', 'WARNING') as logs:
            reflect_operator(self.h, self.spec)
        levels = positive_non_target_levels(self.h, self.spec)

        # then
        self.assertEqual(len(logs.output), 1)
        self.assertEqual(len(levels), 1)
        energy, value = levels[0]
        self.assertGreater(energy, 0.0)
        self.assertAlmostEqual(value, 4.0)

    def test_levels_near_zero_are_not_positive(self):
        # given
        h = -1.0 * self.number + PauliSum.identity(4, 1e-8)

        # when
        levels = positive_non_target_levels(h, self.spec)

        # then
        self.assertEqual(levels, [])

    def test_needs_a_commuting_hamiltonian(self):
        # given
        h = PauliSum.from_labels(4, [('X1', 1.0)])

        # when/then
        with self.assertRaises(ContractError):
            reflect_operator(h, self.spec)

    def test_singlet(self):
        # when
        adapted = reflect_singlet(self.h, self.s2)

        # then
        expected = self.h_matrix - self.h_matrix.dot(self.s2_matrix) - \
            self.s2_matrix.dot(self.h_matrix)
        numpy.testing.assert_allclose(
            to_matrix(adapted.result), expected, atol=1e-10)
        self.assertIs(adapted.method, AdaptationMethod.reflection_singlet)
        self.assertEqual(adapted.provenance['symmetry'], 'spin')


class TestSumOverStates(H2Operators, unittest.TestCase):

    def test_equals_php(self):
        # when
        summed = sum_over_states(self.h, self.spec)
        projected = project_hamiltonian(self.h, self.spec)

        # then
        numpy.testing.assert_allclose(
            to_matrix(summed.result), to_matrix(projected.result),
            atol=1e-8)

    def test_number_operator(self):
        # when
        adapted = sum_over_states(self.number, self.spec)

        # then
        numpy.testing.assert_allclose(
            to_matrix(adapted.result),
            2.0 * to_matrix(lowdin_projector(self.spec)), atol=1e-8)

    def test_spin_target(self):
        # given
        spec = spin_spec(self.s2, 4, 1.0)

        # when
        adapted = sum_over_states(self.h, spec)

        # then
        # the triplet is threefold degenerate
        values = eigvalsh(to_matrix(adapted.result))
        nonzero = values[numpy.abs(values) > 1e-8]
        self.assertEqual(len(nonzero), 3)
        numpy.testing.assert_allclose(nonzero, nonzero[0], atol=1e-8)


if __name__ == '__main__':
    unittest.main()
