"""Dense exact matrices over a finite field.

Elimination pivots on the first nonzero entry of each column, scanning rows
top-down, so results are deterministic.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, FieldMismatch
from .gf import Field


class Matrix:
    __slots__ = ("field", "data")

    def __init__(self, field: Field, data) -> None:
        arr = np.array(data, dtype=np.int64)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= field.order):
            raise ValueError(f"entries out of range for {field!r}")
        arr.setflags(write=False)
        self.field = field
        self.data = arr

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.data.T)

    def conj(self) -> "Matrix":
        return Matrix(self.field, self.field.conj(self.data))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matrix)
            and other.field == self.field
            and other.shape == self.shape
            and np.array_equal(other.data, self.data)
        )

    def __repr__(self) -> str:
        return f"Matrix({self.field!r}, {self.rows}x{self.cols})"

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def is_zero(self) -> bool:
        return not np.any(self.data)


def _same_field(a: Matrix, b: Matrix) -> Field:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")
    return a.field


def _eliminate(field: Field, a: np.ndarray, reduced: bool) -> tuple[np.ndarray, list[int]]:
    """In-place Gaussian elimination on ``a``; returns (a, pivot columns)."""
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        if a[r, c] != 1:
            a[r, c:] = field.mul(a[r, c:], field.inv(a[r, c]))
        lo = 0 if reduced else r + 1
        targets = lo + np.flatnonzero(a[lo:, c])
        targets = targets[targets != r]
        if targets.size:
            block = a[np.ix_(targets, np.arange(c, cols))]
            a[np.ix_(targets, np.arange(c, cols))] = field.sub(block, field.outer(a[targets, c], a[r, c:]))
        pivots.append(c)
        r += 1
    return a, pivots


def rref(m: Matrix) -> tuple[Matrix, list[int], int]:
    """Reduced row-echelon form, pivot columns and rank."""
    a, pivots = _eliminate(m.field, m.data.copy(), reduced=True)
    return Matrix(m.field, a), pivots, len(pivots)


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = _eliminate(m.field, m.data.copy(), reduced=False)
    return len(pivots)


def kernel_basis(m: Matrix) -> Matrix:
    """Rows spanning the right kernel ``{x : m x^T = 0}``."""
    F = m.field
    r, pivots, rk = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    k = np.zeros((len(free), m.cols), dtype=np.int64)
    if free:
        k[np.arange(len(free)), free] = 1
        if rk:
            k[:, pivots] = F.neg(r.data[:rk][:, free]).T
    return Matrix(F, k)


def conj_transpose(m: Matrix) -> Matrix:
    return Matrix(m.field, m.field.conj(m.data).T)


def transpose(m: Matrix) -> Matrix:
    return m.T


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    F = _same_field(a, b)
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.shape} by {b.shape}")
    return Matrix(F, F.matmul(a.data, b.data))


def vstack(blocks: Sequence[Matrix]) -> Matrix:
    F = blocks[0].field
    cols = blocks[0].cols
    for b in blocks[1:]:
        _same_field(blocks[0], b)
        if b.cols != cols and b.rows:
            raise DimensionMismatch(f"column counts {cols} and {b.cols} differ")
    data = [b.data for b in blocks if b.rows]
    if not data:
        return Matrix(F, np.zeros((0, cols), dtype=np.int64))
    return Matrix(F, np.vstack(data))


def stack_rank(a: Matrix, b: Matrix) -> int:
    """Rank of ``a`` stacked on ``b``, i.e. dim(rowspace(a) + rowspace(b))."""
    _same_field(a, b)
    if a.cols != b.cols and a.rows and b.rows:
        raise DimensionMismatch(f"column counts {a.cols} and {b.cols} differ")
    return rank(vstack([a, b]))


def in_row_space(m: Matrix, vec) -> bool:
    v = Matrix(m.field, np.asarray(vec, dtype=np.int64).reshape(1, -1))
    return stack_rank(m, v) == rank(m)
