"""Exact fields, radical classes and small linear algebra."""
from .fields import (Field, FieldElement, FieldError, FunctionField, PrimeField, QQ_FIELD,
                     Rationals, parse_field)
from .linalg import Matrix, Singular, all_matrices, general_linear, hadamard_square, kernel_basis, solve
from .radicals import (RadicalClass, UnsupportedRoot, class_representative,
                       folded_cube_representative, has_nth_root, nth_root, radical_equivalent,
                       roots_of_binomial)

field_parse = parse_field

__all__ = [
    "Field", "FieldElement", "FieldError", "FunctionField", "PrimeField", "QQ_FIELD", "Rationals",
    "parse_field", "field_parse", "Matrix", "Singular", "all_matrices", "general_linear",
    "hadamard_square", "kernel_basis", "solve", "RadicalClass", "UnsupportedRoot",
    "class_representative", "folded_cube_representative", "has_nth_root", "nth_root",
    "radical_equivalent", "roots_of_binomial",
]
