from formdual.catalog import spin7_four_form, theta_hat_form
from formdual.duality import build_duality_operator
from formdual.forms import KForm, hodge_star
from formdual.lifting import (
    SplitBasis,
    block_decompose,
    block_sparsity,
    hodge_dual_lift,
    kron_with_star2,
    proportionality_scalar,
    star2_matrix,
    trivial_lift,
)
from formdual.linalg import RationalMatrix


def test_trivial_lift_preserves_components():
    f = KForm.basis_form(4, (1, 2))
    g = trivial_lift(f, 6)
    assert g.D == 6 and g.k == 2 and g.component((1, 2)) == 1
    assert len(g.coeffs) == 1


def test_hodge_dual_lift_is_star_of_trivial_lift():
    theta = spin7_four_form()
    assert hodge_dual_lift(theta, 10) == hodge_star(trivial_lift(theta, 10))
    assert theta_hat_form().k == 6


def test_split_basis_sizes():
    s = SplitBasis(5)
    base, middle, rest = s.block_sizes()
    assert base + middle + rest == 252
    assert base == 56  # forms fully inside R^8


def test_star2_matrix_squares_to_minus_one():
    s = star2_matrix()
    assert s @ s == RationalMatrix.identity(2).scale(-1)


def test_block_decompose_recovers_diagonal():
    theta = trivial_lift(spin7_four_form(), 10)
    b = build_duality_operator(theta, 4).matrix
    split = SplitBasis(4)
    grid = block_decompose(b, split)
    sizes = split.block_sizes()
    for i in range(3):
        assert grid[i][i].is_square() and grid[i][i].n == sizes[i]
    sparsity = block_sparsity(grid)
    # the trivial lift is block-diagonal: only the three diagonal blocks are nonzero
    assert sparsity == ((True, False, False), (False, True, False), (False, False, True))


def test_proportionality_scalar():
    a = RationalMatrix.from_rows([[1, 2], [0, 1]])
    assert proportionality_scalar(a.scale(-3), a) == -3
    assert proportionality_scalar(RationalMatrix.zeros(2, 2), a) == 0
    assert proportionality_scalar(RationalMatrix.identity(2), a) is None


def test_kron_with_star2_shape():
    a = RationalMatrix.identity(3)
    k = kron_with_star2(a)
    assert k.m == k.n == 6
    assert k @ k == RationalMatrix.identity(6).scale(-1)
