import json
import unittest

from symadapt.errors import ParseError
from symadapt.pauli import PauliSum, dump_operator, load_operator
from symadapt.pauli.serialize import render_json


class TestDumpOperator(unittest.TestCase):

    def setUp(self):
        self.maxDiff = None

    def test_document(self):
        # given
        a = PauliSum.from_labels(2, [('Y0 Y1', 0.25), ('I', -1.5)])

        # when
        text = dump_operator(a, threshold=1e-10, provenance={'mapping': 'jw'})

        # then
        self.assertTrue(text.endswith('\n'))
        document = json.loads(text)
        self.assertEqual(document['n_qubits'], 2)
        self.assertEqual(document['provenance'], {'mapping': 'jw'})
        self.assertEqual(
            document['terms'],
            [{'word': 'I', 're': -1.5, 'im': 0.0},
             {'word': 'Y0 Y1', 're': 0.25, 'im': 0.0}])

    def test_stable_text(self):
        # given
        a = PauliSum.from_labels(2, [('Z0', 1.0 / 3.0), ('X1', 2.0)])
        b = PauliSum.from_labels(2, [('X1', 2.0), ('Z0', 1.0 / 3.0)])

        # when/then
        self.assertEqual(dump_operator(a), dump_operator(b))

    def test_load(self):
        # given
        a = PauliSum.from_labels(3, [('X0 Z2', 0.5), ('Y1', -0.125)])

        # when
        loaded, document = load_operator(dump_operator(a))

        # then
        self.assertEqual(loaded, a)
        self.assertEqual(document['threshold'], 1e-10)

    def test_load_errors(self):
        with self.assertRaises(ParseError):
            load_operator('{not json')
        with self.assertRaises(ParseError):
            load_operator('{"terms": []}')
        with self.assertRaises(ParseError):
            load_operator('{"n_qubits": 1, "terms": [{"word": "X0"}]}')


class TestRenderJson(unittest.TestCase):

    def setUp(self):
        self.maxDiff = None

    def test_layout(self):
        # given
        value = {'a': [1, 2], 'b': {'c': None, 'd': True}, 'e': [{'f': 0.5}]}

        # when
        text = render_json(value)

        # then
        self.assertEqual(text.splitlines(), [
            '{',
            '  "a": [1, 2],',
            '  "b": {"c": null, "d": true},',
            '  "e": [',
            '    {"f": 0.5}',
            '  ]',
            '}'])
        self.assertEqual(json.loads(text), value)

    def test_floats(self):
        self.assertEqual(render_json(0.1), '0.10000000000000001')
        self.assertEqual(render_json(-0.0), '0')
        self.assertEqual(render_json([]), '[]')
        self.assertEqual(render_json({}), '{}')


if __name__ == '__main__':
    unittest.main()
