"""Gaussian elimination over GF(q^2) on matrices of element codes.

Matrices are numpy int arrays of codes; row operations go through the
context's vectorized arithmetic, so elimination on a k x m generator
matrix costs k pivot passes of whole-row table lookups.
"""

from __future__ import annotations

import numpy as np

from .field import FieldCtx

__all__ = ["row_reduce", "matrix_rank", "nullspace", "mat_mul", "identity"]


def row_reduce(ctx: FieldCtx, matrix) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (rref matrix, pivot column list)."""
    a = np.array(matrix, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError("matrix must be two-dimensional")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = ctx.vmul(ctx.inv(int(a[r, c])), a[r])
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            factors = ctx.vneg(a[others, c])
            a[others] = ctx.vadd(a[others], ctx.vmul(factors[:, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots


def matrix_rank(ctx: FieldCtx, matrix) -> int:
    return len(row_reduce(ctx, matrix)[1])


def nullspace(ctx: FieldCtx, matrix) -> np.ndarray:
    """Basis of the right kernel {x : Mx = 0}, one vector per row."""
    rref, pivots = row_reduce(ctx, matrix)
    cols = rref.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = ctx.neg(int(rref[row, f]))
    return basis


def mat_mul(ctx: FieldCtx, a, b) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shape mismatch {a.shape} x {b.shape}")
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = ctx.vadd(out, ctx.vmul(a[:, k][:, None], b[k][None, :]))
    return out


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)
