from fractions import Fraction

import pytest

from formdual import cyclic
from formdual.catalog import z8_four_form
from formdual.forms import KForm
from formdual.linalg import Polynomial, RationalMatrix, minimal_polynomial


def test_shift_preserves_invariant_form():
    omega = z8_four_form()
    assert cyclic.apply_sigma(1, omega) == omega


def test_sigma_operator_has_order_eight():
    s = cyclic.sigma_operator(1, 2)
    p = RationalMatrix.identity(28)
    for _ in range(8):
        p = p @ s
    assert p == RationalMatrix.identity(28)
    assert cyclic.sigma_operator(2, 2) == s @ s


def test_sigma_multiplicities_sum_to_dimension():
    for k, dim in ((2, 28), (3, 56), (4, 70)):
        mults = cyclic.sigma_multiplicities(k)
        total = mults["1"] + mults["-1"] + 2 * mults["i"] + 4 * mults["primitive"]
        assert total == dim


def test_operator_commutes_with_shift():
    for k in (2, 3, 4):
        assert cyclic.commutes_with_sigma(k)


def test_fitted_scale_and_degree_scales():
    assert cyclic.fitted_scale() == Fraction(1, 2)
    assert cyclic.SCALE_BY_DEGREE == {2: 1, 3: 3, 4: 6}


def test_scaled_spectra_minimal_polynomials():
    for k in (2, 3, 4):
        expected = Polynomial.one()
        for f in cyclic.expected_factors(k):
            expected = expected * f
        assert minimal_polynomial(cyclic.z8_operator(k)) == expected.monic()


def test_restricted_matrix_invariance_error():
    op = cyclic.z8_operator(2)
    v = KForm.basis_form(8, (1, 2)).to_vector()
    with pytest.raises(ValueError):
        cyclic.restricted_matrix(op, [v])


def test_restricted_equations_all_hold():
    for k in (2, 3, 4):
        results = cyclic.restricted_sigma_equations(k)
        bad = [key for key, val in results.items() if not val]
        assert not bad, f"k={k}: {bad}"


def test_fixture_vectors_all_verify():
    for k in (2, 3, 4):
        results = cyclic.verify_fixture_vectors(k)
        bad = [key for key, val in results.items() if not val]
        assert not bad, f"k={k}: {bad}"


def test_sigma_multiplicities_match_table():
    for k in (2, 3, 4):
        assert cyclic.sigma_multiplicities(k) == cyclic.EXPECTED_SIGMA_MULTIPLICITIES[k]
