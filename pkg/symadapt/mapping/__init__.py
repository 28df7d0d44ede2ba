__all__ = [
    'MappingKind',
    'encoding_matrix',
    'gf2_inverse',
    'LadderSets',
    'ladder_sets',
    'ladder_images',
    'map_operator',
    'verify_isospectral',
    'IsospectralReport']

from symadapt.mapping.encodings import (
    MappingKind, encoding_matrix, gf2_inverse, LadderSets, ladder_sets)
from symadapt.mapping.mappings import (
    ladder_images, map_operator, verify_isospectral, IsospectralReport)
