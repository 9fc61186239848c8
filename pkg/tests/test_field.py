from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from formdual.field import QuadExt, as_fraction, is_rational, sqrt_exact, squarefree_decompose

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)


def test_squarefree_decompose():
    assert squarefree_decompose(72) == (6, 2)
    assert squarefree_decompose(1) == (1, 1)
    assert squarefree_decompose(7) == (1, 7)


def test_sqrt_exact_rational():
    assert sqrt_exact(Fraction(9, 4)) == Fraction(3, 2)
    assert is_rational(sqrt_exact(16))


def test_sqrt_exact_surd():
    r = sqrt_exact(Fraction(8))
    assert r == QuadExt(0, 2, 2)
    assert r * r == Fraction(8)


def test_quadext_arithmetic():
    x = QuadExt(1, 1, 2)  # 1 + sqrt(2)
    y = QuadExt(1, -1, 2)
    assert x * y == Fraction(-1)
    assert x + y == Fraction(2)
    assert x.conjugate() == y
    assert (x * x) == QuadExt(3, 2, 2)


def test_quadext_inverse_and_division():
    x = QuadExt(3, 1, 5)
    assert x * x.inverse() == Fraction(1)
    assert (x / x) == Fraction(1)
    assert (1 / x) == x.inverse()
    with pytest.raises(ZeroDivisionError):
        QuadExt(0, 0, 5).inverse()


def test_quadext_rational_collapse():
    z = QuadExt(3, 0, 2)
    assert is_rational(z)
    assert as_fraction(z) == Fraction(3)


@given(a=rationals, b=rationals, c=rationals, d=rationals)
def test_quadext_ring_axioms(a, b, c, d):
    x = QuadExt(a, b, 3)
    y = QuadExt(c, d, 3)
    assert x * y == y * x
    assert x * (y + 1) == x * y + x
    assert (x - y) + y == x
