"""Exact integer/rational linear algebra and polynomials."""

from .guard import DEFAULT_BIT_CAP, bit_length_cap, check_bits, get_bit_cap
from .io import format_matrix, format_poly, parse_matrix, parse_poly, read_matrix, read_poly
from .matrix import IntMatrix, char_poly, det
from .poly import IntPoly, is_squarefree, poly_gcd, squarefree_decomposition, squarefree_part
from .quotient import QuotientField, kernel_basis_mod
from .snf import SNFResult, smith_normal_form, verify_snf

__all__ = [
    "DEFAULT_BIT_CAP", "bit_length_cap", "check_bits", "get_bit_cap",
    "format_matrix", "format_poly", "parse_matrix", "parse_poly", "read_matrix", "read_poly",
    "IntMatrix", "char_poly", "det",
    "IntPoly", "is_squarefree", "poly_gcd", "squarefree_decomposition", "squarefree_part",
    "QuotientField", "kernel_basis_mod",
    "SNFResult", "smith_normal_form", "verify_snf",
]
