"""Lifts of forms to higher dimension and the three-block splitting of
Lambda^k R^10 over R^8 + R^2, with block-structure extraction for operators."""

from __future__ import annotations

from fractions import Fraction

from .combinat import basis, basis_index
from .forms import KForm, hodge_star
from .linalg import RationalMatrix, kron


def trivial_lift(f: KForm, d_new: int) -> KForm:
    """Reinterpret a form on R^D as a form on R^{d_new}, components unchanged."""
    if d_new < f.D:
        raise ValueError(f"cannot lift from D={f.D} down to D={d_new}")
    return KForm(d_new, f.k, dict(f.coeffs))


def hodge_dual_lift(f: KForm, d_new: int) -> KForm:
    """The Hodge dual (in the larger space) of the trivial lift."""
    return hodge_star(trivial_lift(f, d_new))


class SplitBasis:
    """The three-block decomposition of Lambda^k R^{D} with D = base + 2.

    Block 1: indices within 1..base.
    Block 2: exactly one of {base+1, base+2}; ordered pairwise per base index,
             (A, base+1) then (A, base+2), so operators factor as kron(M, S2).
    Block 3: both extra indices present.
    """

    def __init__(self, k: int, d_total: int = 10, d_base: int = 8):
        if d_total != d_base + 2:
            raise ValueError("split requires exactly two extra dimensions")
        if not 2 <= k <= d_total:
            raise ValueError(f"degree k={k} needs 2 <= k <= {d_total}")
        self.k = k
        self.d_total = d_total
        self.d_base = d_base
        e1, e2 = d_base + 1, d_base + 2
        pos = basis_index(d_total, k)
        self.block1 = [pos[idx] for idx in basis(d_base, k)]
        self.block2 = []
        for a in basis(d_base, k - 1):
            self.block2.append(pos[a + (e1,)])
            self.block2.append(pos[a + (e2,)])
        self.block3 = [pos[a + (e1, e2)] for a in basis(d_base, k - 2)]
        self.blocks = (self.block1, self.block2, self.block3)
        total = sum(len(b) for b in self.blocks)
        if total != len(basis(d_total, k)):
            raise AssertionError("block sizes do not sum to the ambient dimension")

    def block_sizes(self) -> tuple[int, int, int]:
        return tuple(len(b) for b in self.blocks)


def star2_matrix() -> RationalMatrix:
    """Hodge star of R^2 on the ordered (e_{base+1}, e_{base+2}) coordinates."""
    return RationalMatrix.from_rows([[0, -1], [1, 0]])


def block_decompose(op: RationalMatrix, split: SplitBasis) -> list[list[RationalMatrix]]:
    """3x3 grid of sub-blocks of a square operator on Lambda^k R^{D}."""
    n = len(basis(split.d_total, split.k))
    if op.m != n or op.n != n:
        raise ValueError("operator shape does not match the split")
    grid = []
    for rows_idx in split.blocks:
        row_pos = {g: i for i, g in enumerate(rows_idx)}
        grid_row = []
        for cols_idx in split.blocks:
            col_pos = {g: j for j, g in enumerate(cols_idx)}
            sub: list[dict] = [{} for _ in rows_idx]
            for g_row, i in row_pos.items():
                for g_col, v in op.rows[g_row].items():
                    j = col_pos.get(g_col)
                    if j is not None:
                        sub[i][j] = v
            grid_row.append(RationalMatrix(len(rows_idx), len(cols_idx), sub))
        grid.append(grid_row)
    return grid


def block_sparsity(grid: list[list[RationalMatrix]]) -> tuple[tuple[bool, bool, bool], ...]:
    """Which blocks of the 3x3 grid are nonzero."""
    return tuple(tuple(not blk.is_zero() for blk in row) for row in grid)


def proportionality_scalar(block: RationalMatrix, reference: RationalMatrix):
    """The unique scalar lam with block = lam * reference, or None."""
    if block.m != reference.m or block.n != reference.n:
        raise ValueError("shape mismatch")
    lam = None
    for i, r in enumerate(reference.rows):
        if r:
            j = min(r)
            lam = block.entry(i, j) / r[j]
            break
    if lam is None:
        return Fraction(0) if block.is_zero() else None
    return lam if block == reference.scale(lam) else None


def kron_with_star2(m: RationalMatrix) -> RationalMatrix:
    """M (x) *_2 in the ordering used by SplitBasis block 2."""
    return kron(m, star2_matrix())
