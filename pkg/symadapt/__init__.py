# -----------------------------------------------------------------------------
#  file: __init__.py
#  License: LICENSE.TXT
#
#  Copyright (c) 2019, the symadapt developers.
#  All rights reserved.
# -----------------------------------------------------------------------------
try:  # pragma: no cover
    from symadapt._version import full_version as __version__
except ImportError:  # pragma: no cover
    __version__ = "not-built"

from symadapt.pauli import PauliWord, PauliSum, StateVector
from symadapt.fermion import FermionOperator, IntegralSet, load_fcidump
from symadapt.mapping import MappingKind, map_operator

__all__ = [
    '__version__',
    'PauliWord',
    'PauliSum',
    'StateVector',
    'FermionOperator',
    'IntegralSet',
    'load_fcidump',
    'MappingKind',
    'map_operator']
