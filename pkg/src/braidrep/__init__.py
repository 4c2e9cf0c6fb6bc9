"""Exact-arithmetic linear representations of the braid groups.

Burau and Lawrence-Krammer-Bigelow matrices over Laurent polynomials,
Garside combinatorics for positive braids, a faithfulness-based word-problem
solver, the simple-generator length function, and the Bratteli dimension
machinery of the BMW tower.
"""

from .braid import (
    BraidWord,
    Permutation,
    all_permutations,
    permutation_from_inversions,
    refpairs,
)
from .burau import (
    burau_generator,
    burau_of_word,
    burau_reduced_of_word,
    burau_specialize_t1,
    kernel_word_b6,
    permutation_matrix,
)
from .bmw import (
    BMWReport,
    RelationCheck,
    YoungDiagram,
    bmw_relation_check,
    bratteli_dim,
    bratteli_neighbors,
    level_diagrams,
    sum_sq_dimensions,
)
from .errors import InternalCheckError, ResourceGuardError
from .garside import (
    NormalForm,
    all_half_permutations,
    gb,
    gb_oracle,
    generator_action,
    greedy_normal_form,
    half_permutation_from_json,
    half_permutation_to_json,
    is_half_permutation,
    lf_positive,
    positive_action,
    positive_fraction,
    random_half_permutation,
    simple_head,
)
from .laurent import LaurentPoly, divide_exact
from .lkb import (
    WVector,
    apply_positive_word,
    basis_change_v_of_x,
    full_twist_scalar,
    is_trivial,
    length_omega,
    lkb_dim,
    lkb_generator,
    lkb_of_word,
    omega_ball_oracle,
    w_class,
    words_equal,
)
from .matrix import RepMatrix, mat_det, mat_inverse, t_degree_range

__all__ = [
    "BMWReport",
    "BraidWord",
    "InternalCheckError",
    "LaurentPoly",
    "NormalForm",
    "Permutation",
    "RelationCheck",
    "RepMatrix",
    "ResourceGuardError",
    "WVector",
    "YoungDiagram",
    "all_half_permutations",
    "all_permutations",
    "apply_positive_word",
    "basis_change_v_of_x",
    "bmw_relation_check",
    "bratteli_dim",
    "bratteli_neighbors",
    "burau_generator",
    "burau_of_word",
    "burau_reduced_of_word",
    "burau_specialize_t1",
    "divide_exact",
    "full_twist_scalar",
    "gb",
    "gb_oracle",
    "generator_action",
    "greedy_normal_form",
    "half_permutation_from_json",
    "half_permutation_to_json",
    "is_half_permutation",
    "is_trivial",
    "kernel_word_b6",
    "length_omega",
    "level_diagrams",
    "lf_positive",
    "lkb_dim",
    "lkb_generator",
    "lkb_of_word",
    "mat_det",
    "mat_inverse",
    "omega_ball_oracle",
    "permutation_from_inversions",
    "permutation_matrix",
    "positive_action",
    "positive_fraction",
    "random_half_permutation",
    "refpairs",
    "simple_head",
    "sum_sq_dimensions",
    "t_degree_range",
    "w_class",
    "words_equal",
]
