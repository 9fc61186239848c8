"""Multi-index combinatorics: lexicographic k-subset bases and permutation signs."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb


@lru_cache(maxsize=None)
def basis(D: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All strictly increasing k-tuples from 1..D, in lexicographic order."""
    if k < 0 or k > D:
        raise ValueError(f"degree k={k} out of range for D={D}")
    return tuple(combinations(range(1, D + 1), k))


@lru_cache(maxsize=None)
def basis_index(D: int, k: int) -> dict[tuple[int, ...], int]:
    """Position of each sorted k-tuple within basis(D, k)."""
    return {idx: pos for pos, idx in enumerate(basis(D, k))}


def basis_dim(D: int, k: int) -> int:
    if k < 0 or k > D:
        raise ValueError(f"degree k={k} out of range for D={D}")
    return comb(D, k)


def sort_with_sign(indices) -> tuple[tuple[int, ...], int]:
    """Sort an index tuple, returning (sorted tuple, permutation sign).

    Sign is 0 when an index repeats (the component vanishes by antisymmetry).
    """
    idx = tuple(indices)
    if len(set(idx)) != len(idx):
        return idx, 0
    sign = 1
    for i in range(len(idx)):
        for j in range(i + 1, len(idx)):
            if idx[i] > idx[j]:
                sign = -sign
    return tuple(sorted(idx)), sign


def perm_sign(indices) -> int:
    """Sign of the permutation sorting `indices`; 0 on repeats."""
    return sort_with_sign(indices)[1]


def shuffle_sign(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Sign of merging two disjoint sorted tuples a, b into one sorted tuple.

    Equals the sign of the permutation taking the concatenation (a, b) to
    sorted order; counts inversions between the blocks.
    """
    inv = 0
    for x in b:
        for y in a:
            if y > x:
                inv += 1
    return -1 if inv % 2 else 1


def complement(idx: tuple[int, ...], D: int) -> tuple[int, ...]:
    """The increasing complement of a sorted index tuple inside 1..D."""
    s = set(idx)
    return tuple(i for i in range(1, D + 1) if i not in s)
