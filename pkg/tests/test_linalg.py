from fractions import Fraction

from formdual.linalg import (
    Polynomial,
    RationalMatrix,
    kernel_basis,
    kron,
    minimal_polynomial,
    poly_eval_matrix,
    rank,
    rational_roots,
    rref,
)


def test_polynomial_arithmetic():
    p = Polynomial([1, 1])   # 1 + t
    q = Polynomial([-1, 1])  # t - 1
    assert p * q == Polynomial([-1, 0, 1])
    assert (p * q) % p == Polynomial.zero()
    assert (p * q) // q == p
    assert p.gcd(q).is_one()


def test_polynomial_from_roots_and_eval():
    p = Polynomial.from_roots([1, 2, 3])
    assert p(1) == 0 and p(2) == 0 and p(3) == 0 and p(0) == -6
    assert p.is_monic()


def test_rational_roots():
    p = Polynomial([Fraction(-8, 3), Fraction(10, 3), 1])
    roots = dict(rational_roots(p))
    assert roots == {Fraction(-4): 1, Fraction(2, 3): 1}
    assert rational_roots(Polynomial([1, 0, 1])) == []


def test_matrix_arithmetic_and_trace():
    a = RationalMatrix.from_rows([[1, 2], [3, 4]])
    b = RationalMatrix.from_rows([[0, 1], [1, 0]])
    assert (a @ b) == RationalMatrix.from_rows([[2, 1], [4, 3]])
    assert a.transpose().trace() == a.trace() == 5
    assert a.matvec([1, 0]) == [Fraction(1), Fraction(3)]


def test_rref_rank_kernel():
    m = RationalMatrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    _, r, pivots = rref(m)
    assert r == rank(m) == 2
    ker = kernel_basis(m)
    assert len(ker) == 1
    assert all(x == 0 for x in m.matvec(ker[0]))


def test_minimal_polynomial():
    m = RationalMatrix.from_rows([[2, 0, 0], [0, 2, 0], [0, 0, 3]])
    mp = minimal_polynomial(m)
    assert mp == Polynomial.from_roots([2, 3])
    assert poly_eval_matrix(mp, m).is_zero()


def test_kron_mixed_product():
    a = RationalMatrix.from_rows([[1, 2], [0, 1]])
    b = RationalMatrix.from_rows([[0, -1], [1, 0]])
    assert kron(a, b) @ kron(a, b) == kron(a @ a, b @ b)


def test_matrix_json_roundtrip():
    a = RationalMatrix.from_rows([[Fraction(1, 3), 0], [0, -2]])
    assert RationalMatrix.from_json(a.to_json()) == a
