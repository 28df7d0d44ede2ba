__all__ = [
    'SymmetryKind',
    'SymmetrySpec',
    'number_spec',
    'spin_spec',
    'commutator_residual',
    'AdaptationMethod',
    'AdaptedOperator',
    'lowdin_projector',
    'truncated_projector',
    'project_hamiltonian',
    'shift_operator',
    'reflect_operator',
    'reflect_singlet',
    'sum_over_states',
    'positive_non_target_levels']

from symadapt.adapt.symmetry import (
    SymmetryKind, SymmetrySpec, number_spec, spin_spec, commutator_residual)
from symadapt.adapt.transforms import (
    AdaptationMethod, AdaptedOperator, lowdin_projector, truncated_projector,
    project_hamiltonian, shift_operator, reflect_operator, reflect_singlet,
    sum_over_states, positive_non_target_levels)
