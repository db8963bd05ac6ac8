"""Quasi-twisted two-weight codes from consta-cyclic simplex codes."""

from .field import FieldTable, gf, make_field
from .polyring import Poly, find_primitive_polynomial, hamming_weight, mul_mod_twisted, poly_divmod
from .qtform import QtDecomposition, WeightMatrix, block_poly_row, decompose, qt_permutation, weight_matrix
from .search import SearchConfig, SearchHit, complement_hit, find_two_weight_subsets, row_sums
from .simplex import SimplexCode, TwistulantSpec, build_simplex, full_constacyclic_matrix, twistulant_matrix
from .verifier import (
    LinearCodeInstance,
    build_selected_generator,
    is_projective,
    is_two_weight,
    oracle_weights_equal_row_sums,
    weight_distribution,
)

__version__ = "0.1.0"
