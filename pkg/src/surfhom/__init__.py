"""Exact counts of homomorphisms from surface groups and one-relator groups into finite groups."""
from .chartable import CharacterTable, character_table, fs_indicator, generalized_indicator
from .classfun import ClassFunction, closed_form_coefficients, coefficients_from_class_function, convolution
from .counting import (NONORIENTABLE, ORIENTABLE, HomCount, count_general, count_surface,
                       linear_character_identity, tuple_sum_identity)
from .cyclotomic import Cyclotomic
from .errors import BudgetExceeded, InternalError, SurfhomError, UsageError
from .groups import FiniteGroup, Permutation, builtin_group, parse_group_spec, symmetric_group
from .oracle import Budget, oracle_class_function, oracle_count_with_boundary, word_histogram
from .partitions import Partition, hook_product, partitions_of, symmetric_group_character
from .symfunc import PBasisVector, genfun_coefficients, schur_in_p, word_power_sum_average
from .words import Word, parse_word, recognize_shape

__all__ = [
    "Budget", "BudgetExceeded", "CharacterTable", "ClassFunction", "Cyclotomic", "FiniteGroup",
    "HomCount", "InternalError", "NONORIENTABLE", "ORIENTABLE", "PBasisVector", "Partition",
    "Permutation", "SurfhomError", "UsageError", "Word", "builtin_group", "character_table",
    "closed_form_coefficients", "coefficients_from_class_function", "convolution", "count_general",
    "count_surface", "fs_indicator", "generalized_indicator", "genfun_coefficients", "hook_product",
    "linear_character_identity", "oracle_class_function", "oracle_count_with_boundary",
    "parse_group_spec", "parse_word", "partitions_of", "recognize_shape", "schur_in_p",
    "symmetric_group", "symmetric_group_character", "tuple_sum_identity", "word_histogram",
    "word_power_sum_average",
]
