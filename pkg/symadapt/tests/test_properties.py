import shutil
import tempfile
import unittest

import numpy

from symadapt.tests._molecules import write_h2
from symadapt.tooling import RunConfig, pipeline, properties


class TestCheckResults(unittest.TestCase):

    def test_helpers(self):
        self.assertTrue(properties.bounded('a', 1e-12, 1e-10).passed)
        self.assertFalse(properties.bounded('a', 1e-9, 1e-10).passed)
        self.assertTrue(properties.exceeding('b', 1.0, 1e-6).passed)
        self.assertFalse(properties.equal('c', (1, 2), (1, 3)).passed)
        self.assertEqual(
            properties.equal('c', 1, 1).detail, 'expected 1, observed 1')

    def test_outcomes_are_plain_booleans(self):
        # given
        worst = numpy.float64(1e-12)

        # when
        results = [
            properties.bounded('a', worst, 1e-10),
            properties.exceeding('b', numpy.float64(1.0), 1e-6),
            properties.equal('c', numpy.int64(3), 3)]

        # then
        for result in results:
            self.assertIs(result.passed, True)
        self.assertIn('passed=True', repr(results[0]))


class TestRandomInstances(unittest.TestCase):

    def test_random_pauli_sum(self):
        # given
        rng = numpy.random.default_rng(4)

        # when
        a = properties.random_pauli_sum(3, 10, rng, hermitian=True)

        # then
        self.assertEqual(a.n_qubits, 3)
        self.assertTrue(a.is_hermitian(tol=1e-12))

    def test_random_fermion_operator(self):
        # when
        op = properties.random_fermion_operator(
            4, 6, numpy.random.default_rng(5))

        # then
        self.assertTrue(op.is_hermitian())


class TestPropertySuite(unittest.TestCase):

    def test_all_properties_hold(self):
        # when
        results = properties.property_suite(trials=3, seed=11)

        # then
        self.assertEqual(len(results), 5)
        for result in results:
            self.assertTrue(result.passed, result)


class TestFixtureChecks(unittest.TestCase):

    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.config = RunConfig.defaults().replace(
            fcidump=write_h2(self.directory))

    def tearDown(self):
        shutil.rmtree(self.directory)

    def test_h2(self):
        # given
        built = pipeline.build_operators(self.config)

        # when
        results = properties.fixture_checks(built, self.config)
        acceptance = properties.acceptance_checks(built, self.config)

        # then
        self.assertEqual(len(results), 4)
        for result in results:
            self.assertTrue(result.passed, result)
        self.assertEqual(acceptance, [])


if __name__ == '__main__':
    unittest.main()
