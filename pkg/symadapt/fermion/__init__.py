__all__ = [
    'FermionOperator',
    'normal_order',
    'IntegralSet',
    'FcidumpReader',
    'load_fcidump',
    'read_fcidump',
    'dump_fcidump',
    'SpinOrbitalConvention',
    'build_hamiltonian',
    'build_number_operator',
    'build_sz_operator',
    'build_spin_ladder',
    'build_s2_operator']

from symadapt.fermion.operator import FermionOperator, normal_order
from symadapt.fermion.integrals import IntegralSet
from symadapt.fermion.fcidump import (
    FcidumpReader, load_fcidump, read_fcidump, dump_fcidump)
from symadapt.fermion.builders import (
    SpinOrbitalConvention, build_hamiltonian, build_number_operator,
    build_sz_operator, build_spin_ladder, build_s2_operator)
