# -*- coding: utf-8 -*-
#-----------------------------------------------------------------------------
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
#-----------------------------------------------------------------------------
""" JSON rendering of Pauli sums.

The document layout is::

    {"n_qubits": 6,
     "threshold": 1e-10,
     "terms": [{"word": "X0 Y3 Z5", "re": ..., "im": ...}, ...],
     "provenance": {...}}

Terms follow the canonical ``(z_mask, x_mask)`` order, coefficients are
given in the X/Y/Z basis and every float is written with 17 significant
digits, so equal operators give byte-identical documents.

"""
import json
import numbers

from symadapt.errors import ParseError
from symadapt.pauli.pauli_sum import PauliSum
from symadapt.util import DEFAULT_THRESHOLD, format_float


def dump_operator(a, threshold=DEFAULT_THRESHOLD, provenance=None):
    """ Render a Pauli sum as a JSON document.

    Arguments
    ---------
    a : PauliSum
        The operator.

    threshold : float
        The pruning threshold the operator was built with.

    provenance : dict
        Optional settings recorded next to the terms.

    Returns
    -------
    text : str
        The document, terminated by a new line.

    """
    terms = [
        {'word': label, 're': coefficient.real, 'im': coefficient.imag}
        for label, coefficient in a.xyz_terms()]
    document = {
        'n_qubits': a.n_qubits,
        'threshold': threshold,
        'terms': terms}
    if provenance is not None:
        document['provenance'] = provenance
    return render_json(document) + '\n'


def load_operator(text):
    """ Parse a document written by :func:`dump_operator`.

    Returns
    -------
    operator : PauliSum
        The operator, pruned with the recorded threshold.

    document : dict
        The full decoded document.

    Raises
    ------
    ParseError :
        When the text is not valid JSON or lacks the required keys.

    """
    try:
        document = json.loads(text)
    except ValueError as error:
        raise ParseError('invalid operator JSON: {0}'.format(error))
    try:
        n_qubits = int(document['n_qubits'])
        threshold = float(document.get('threshold', DEFAULT_THRESHOLD))
        terms = [
            (term['word'], complex(term['re'], term['im']))
            for term in document['terms']]
    except (KeyError, TypeError) as error:
        raise ParseError('malformed operator document: {0}'.format(error))
    operator = PauliSum.from_labels(n_qubits, terms, threshold=threshold)
    return operator, document


def render_json(value, indent=2, level=0):
    """ Deterministic JSON rendering with fixed float formatting.

    Dictionaries keep their insertion order. Short lists of scalars and
    the term dictionaries are kept on one line.

    """
    pad = ' ' * (indent * (level + 1))
    end = ' ' * (indent * level)
    if isinstance(value, dict):
        if len(value) == 0:
            return '{}'
        if _is_flat(value):
            return '{' + ', '.join(
                '{0}: {1}'.format(json.dumps(str(key)), render_json(item))
                for key, item in value.items()) + '}'
        items = [
            '{0}{1}: {2}'.format(
                pad, json.dumps(str(key)),
                render_json(item, indent, level + 1))
            for key, item in value.items()]
        return '{\n' + ',\n'.join(items) + '\n' + end + '}'
    elif isinstance(value, (list, tuple)):
        if len(value) == 0:
            return '[]'
        if all(_is_scalar(item) for item in value):
            return '[' + ', '.join(render_json(item) for item in value) + ']'
        items = [
            pad + render_json(item, indent, level + 1) for item in value]
        return '[\n' + ',\n'.join(items) + '\n' + end + ']'
    elif isinstance(value, bool) or value is None:
        return json.dumps(value)
    elif isinstance(value, numbers.Integral):
        return str(int(value))
    elif isinstance(value, numbers.Real):
        return format_float(value)
    return json.dumps(str(value))


def _is_scalar(value):
    return not isinstance(value, (dict, list, tuple))


def _is_flat(value):
    return all(_is_scalar(item) for item in value.values())
