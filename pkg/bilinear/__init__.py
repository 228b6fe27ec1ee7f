"""
Bilinear multiplication algorithms: representation, verification,
construction by interpolation, exhaustive rank search and the generalized
Chudnovsky-Chudnovsky bound combinator.
"""

from .decomposition import (
    BilinearDecomposition, Triple, decomposition_from_dict, decomposition_to_dict,
    rescale_triple, verify_decomposition,
)
from .interpolation import build_interpolation_algorithm, build_truncated_interpolation_algorithm
from .brute_force import NotFound, brute_force_min_rank, structure_tensor
from .general_cc import (
    Inapplicable, PlaceBudget, general_cc_bound, has_place_of_degree, place_rhs_capped,
)

__all__ = [
    'BilinearDecomposition', 'Triple', 'decomposition_from_dict', 'decomposition_to_dict',
    'rescale_triple', 'verify_decomposition',
    'build_interpolation_algorithm', 'build_truncated_interpolation_algorithm',
    'NotFound', 'brute_force_min_rank', 'structure_tensor',
    'Inapplicable', 'PlaceBudget', 'general_cc_bound', 'has_place_of_degree', 'place_rhs_capped',
]
