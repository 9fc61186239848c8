from math import comb

from hypothesis import given, strategies as st

from formdual.combinat import (
    basis,
    basis_dim,
    basis_index,
    complement,
    perm_sign,
    shuffle_sign,
    sort_with_sign,
)


def test_basis_is_sorted_lexicographic():
    b = basis(5, 3)
    assert len(b) == comb(5, 3)
    assert list(b) == sorted(b)
    assert all(idx == tuple(sorted(idx)) for idx in b)


def test_basis_index_roundtrip():
    idx = basis_index(6, 2)
    for pos, tup in enumerate(basis(6, 2)):
        assert idx[tup] == pos


def test_basis_dim():
    assert basis_dim(8, 4) == 70
    assert basis_dim(10, 5) == 252


def test_sort_with_sign():
    assert sort_with_sign((1, 2, 3)) == ((1, 2, 3), 1)
    assert sort_with_sign((2, 1, 3)) == ((1, 2, 3), -1)
    assert sort_with_sign((3, 1, 2)) == ((1, 2, 3), 1)
    assert sort_with_sign((1, 1, 2))[1] == 0


@given(st.permutations(list(range(1, 7))))
def test_perm_sign_matches_bubble_count(p):
    inversions = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    assert perm_sign(tuple(p)) == (-1) ** inversions


def test_complement():
    assert complement((1, 3), 4) == (2, 4)
    assert complement((), 3) == (1, 2, 3)
    assert complement((1, 2, 3), 3) == ()


def test_shuffle_sign_is_concatenation_sign():
    assert shuffle_sign((1, 3), (2, 4)) == perm_sign((1, 3, 2, 4))
    assert shuffle_sign((1, 2), (3, 4)) == 1
