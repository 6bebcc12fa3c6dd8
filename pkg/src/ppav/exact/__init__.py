from ppav.exact.linalg import (
    determinant,
    inverse,
    is_positive_definite,
    is_unimodular,
    rank,
    rank_mod_p,
    solve_left,
)
from ppav.exact.matrix import GaussianMatrix, IntegerMatrix, Matrix, RationalMatrix
from ppav.exact.normal_forms import hermite_normal_form, integer_kernel, smith_normal_form
from ppav.exact.scalars import I, GaussianRational, format_rational, imag_part, real_part

__all__ = [
    "GaussianMatrix",
    "GaussianRational",
    "I",
    "IntegerMatrix",
    "Matrix",
    "RationalMatrix",
    "determinant",
    "format_rational",
    "hermite_normal_form",
    "imag_part",
    "integer_kernel",
    "inverse",
    "is_positive_definite",
    "is_unimodular",
    "rank",
    "rank_mod_p",
    "real_part",
    "smith_normal_form",
    "solve_left",
]
