__all__ = [
    'PauliWord',
    'word_multiply',
    'PauliSum',
    'simplify',
    'sum_add',
    'sum_scale',
    'sum_multiply',
    'commutator',
    'term_count',
    'to_matrix',
    'StateVector',
    'expectation',
    'variance',
    'dump_operator',
    'load_operator']

from symadapt.pauli.word import PauliWord, word_multiply
from symadapt.pauli.pauli_sum import (
    PauliSum, simplify, sum_add, sum_scale, sum_multiply, commutator,
    term_count, to_matrix)
from symadapt.pauli.state import StateVector, expectation, variance
from symadapt.pauli.serialize import dump_operator, load_operator
