import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from formdual.catalog import get_form, spin7_four_form
from formdual.combinat import basis
from formdual.duality import (
    apply_direct,
    apply_operator,
    build_duality_operator,
    calibration_kappa,
    derivation_operator,
    star_matrix,
)
from formdual.forms import KForm
from formdual.linalg import minimal_polynomial, Polynomial


def _random_form(rng, d, k, terms=5):
    all_idx = basis(d, k)
    chosen = rng.sample(all_idx, min(terms, len(all_idx)))
    return KForm.from_terms(d, k, [(idx, Fraction(rng.randint(-5, 5), rng.randint(1, 5))) for idx in chosen])


def test_calibration_constant_is_one():
    assert calibration_kappa() == 1


def test_anchor_minimal_polynomial():
    b = build_duality_operator(spin7_four_form(), 3)
    assert minimal_polynomial(b.matrix) == Polynomial([Fraction(-8, 3), Fraction(10, 3), 1])


def test_operator_shapes_and_flags():
    b = build_duality_operator(get_form("theta8"), 2)
    assert (b.D, b.m, b.degenerate) == (8, 2, False)
    assert b.matrix.n == 28 and b.matrix.is_square()


def test_degenerate_for_odd_degree():
    omega = KForm.basis_form(6, (1, 2, 3))
    b = build_duality_operator(omega, 2)
    assert b.degenerate and b.matrix.is_zero()


def test_degenerate_for_oversized_degree():
    omega = KForm.basis_form(8, (1, 2, 3, 4, 5, 6))
    b = build_duality_operator(omega, 2)
    assert b.degenerate and b.matrix.is_zero()


@given(seed=st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_matrix_agrees_with_direct_contraction(seed):
    rng = random.Random(seed)
    b = build_duality_operator(get_form("theta8"), 3)
    f = _random_form(rng, 8, 3)
    assert apply_operator(b, f) == apply_direct(b.omega, 3, f)


@given(seed=st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_operator_linearity(seed):
    rng = random.Random(seed)
    b = build_duality_operator(get_form("z8"), 2)
    f, g = _random_form(rng, 8, 2), _random_form(rng, 8, 2)
    c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    assert apply_operator(b, f.scale(c) + g) == apply_operator(b, f).scale(c) + apply_operator(b, g)


def test_two_form_operator_is_derivation_multiple():
    j = get_form("j3")
    b = build_duality_operator(j, 2)
    assert b.matrix == derivation_operator(j, 2).scale(Fraction(1, 2))


def test_star_matrix_squares_to_sign():
    s = star_matrix(6, 2)
    from formdual.linalg import RationalMatrix
    s2 = star_matrix(6, 4)
    assert s2 @ s == RationalMatrix.identity(15)
