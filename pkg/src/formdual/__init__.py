"""formdual: exact duality operators on exterior forms, with verification suites."""

from .combinat import basis, basis_dim, basis_index, complement, perm_sign, shuffle_sign, sort_with_sign
from .field import QuadExt, sqrt_exact
from .forms import KForm, full_contraction, hodge_star, inner_product, kform_from_json, kform_to_json, wedge
from .linalg import Polynomial, RationalMatrix, kernel_basis, minimal_polynomial, rank, rref

__version__ = "0.1.0"

__all__ = [
    "KForm",
    "Polynomial",
    "QuadExt",
    "RationalMatrix",
    "basis",
    "basis_dim",
    "basis_index",
    "complement",
    "full_contraction",
    "hodge_star",
    "inner_product",
    "kernel_basis",
    "kform_from_json",
    "kform_to_json",
    "minimal_polynomial",
    "perm_sign",
    "rank",
    "rref",
    "shuffle_sign",
    "sort_with_sign",
    "sqrt_exact",
    "wedge",
]
