from fractions import Fraction

from formdual.catalog import get_form
from formdual.duality import build_duality_operator
from formdual.field import QuadExt
from formdual.linalg import Polynomial, RationalMatrix
from formdual.spectral import (
    derive_factors,
    eigenspace_basis,
    factor_kernel_basis,
    rational_root_check,
    spectrum,
)


def _diag(*vals):
    return RationalMatrix.from_rows([[vals[i] if i == j else 0 for j in range(len(vals))] for i in range(len(vals))])


def test_spectrum_rational_diagonal():
    m = _diag(2, 2, -1)
    rep = spectrum(m)
    assert rep.min_poly == Polynomial.from_roots([2, -1])
    assert rep.dim_of(Fraction(2)) == 2 and rep.dim_of(Fraction(-1)) == 1
    assert rep.dims_total() == 3


def test_spectrum_imaginary_pair():
    m = RationalMatrix.from_rows([[0, -2], [2, 0]])  # eigenvalues +-2i
    rep = spectrum(m)
    assert rep.min_poly == Polynomial([4, 0, 1])
    assert rep.imaginary_dim(Fraction(2)) == 2


def test_spectrum_surd_imaginary_pair():
    m = RationalMatrix.from_rows([[0, -8], [1, 0]])  # t^2 + 8 -> +-2*sqrt(2) i
    rep = spectrum(m)
    (desc, dim), = rep.eigen
    assert desc.kind == "imaginary" and desc.value == QuadExt(0, 2, 2) and dim == 2


def test_derive_factors_splits_even_quartic():
    p = Polynomial([16, 0, -14, 0, 1])  # t^4 - 14 t^2 + 16, irreducible over Q
    factors = derive_factors(p)
    assert Polynomial([1]) not in factors
    prod = Polynomial.one()
    for f in factors:
        prod = prod * f
    assert prod == p


def test_expected_factor_matching():
    m = _diag(3, 0)
    good = spectrum(m, expected_factors=[Polynomial([0, 1]), Polynomial([-3, 1])])
    assert good.expected_match
    bad = spectrum(m, expected_factors=[Polynomial([0, 1]), Polynomial([-4, 1])])
    assert not bad.expected_match


def test_eigenspace_and_factor_kernel():
    b = build_duality_operator(get_form("theta8"), 3).matrix
    assert len(eigenspace_basis(b, Fraction(-4))) == 8
    assert len(eigenspace_basis(b, Fraction(2, 3))) == 48
    assert len(factor_kernel_basis(b, Polynomial([Fraction(-2, 3), 1]))) == 48


def test_rational_root_check():
    ok = rational_root_check(Polynomial.from_roots([1, Fraction(1, 2)]))
    assert ok
    assert not rational_root_check(Polynomial([1, 0, 1]))


def test_report_json_has_string_rationals():
    rep = spectrum(_diag(Fraction(1, 3)))
    payload = rep.to_json()
    text = str(payload)
    assert "1/3" in text and "Fraction" not in text
