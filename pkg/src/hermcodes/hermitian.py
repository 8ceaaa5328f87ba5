"""Hermitian matrices and varieties in P^n(GF(q^2)).

A Hermitian matrix is a nonzero (n+1) x (n+1) matrix H of element codes
with h_ij = h_ji^q (so the diagonal lies in GF(q)); its variety is the
zero set of x^T H x^(q).  The module provides form evaluation, rank,
congruence reduction to diag(1,...,1,0,...,0), the standard rank-n cone
and nondegenerate varieties, closed-form point counts, line
classification, polar tangent hyperplanes, and hyperplane sections with
their rank-based classification.

Sections are computed by re-expressing the form in a basis of the
hyperplane (a basis-completion matrix), not by filtering points, so the
restricted rank is available; the section's point count is still obtained
by direct incidence filtering, which keeps the two answers independently
checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .field import FieldCtx
from .linalg import identity, mat_mul, matrix_rank, nullspace
from .projspace import enumerate_points, incidence_values, line_through, normalize_vector

__all__ = [
    "is_hermitian",
    "validate_hermitian",
    "evaluate_hermitian_form",
    "hermitian_form_values",
    "hermitian_rank",
    "congruence_transform",
    "canonical_congruence",
    "HermitianVariety",
    "make_standard_cone",
    "make_nondegenerate",
    "count_points_formula",
    "LineClass",
    "classify_line",
    "tangent_hyperplane",
    "SectionInfo",
    "hyperplane_section",
]


def is_hermitian(ctx: FieldCtx, matrix) -> bool:
    h = np.asarray(matrix, dtype=np.int64)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        return False
    if not h.any():
        return False
    return bool(np.array_equal(h.T, ctx.vfrob(h)))


def validate_hermitian(ctx: FieldCtx, matrix) -> np.ndarray:
    h = np.asarray(matrix, dtype=np.int64)
    if not is_hermitian(ctx, h):
        raise ValueError("matrix is not a nonzero Hermitian matrix (H^T must equal H^(q))")
    return h


def evaluate_hermitian_form(ctx: FieldCtx, matrix, x) -> int:
    """x^T H x^(q); lies in GF(q), zero iff x is on the variety."""
    h = np.asarray(matrix, dtype=np.int64)
    x = [int(c) for c in x]
    if len(x) != h.shape[0]:
        raise ValueError("dimension mismatch between matrix and point")
    y = [ctx.frob(c) for c in x]
    acc = 0
    for i, xi in enumerate(x):
        if xi == 0:
            continue
        row = 0
        for j, yj in enumerate(y):
            row = ctx.add(row, ctx.mul(int(h[i, j]), yj))
        acc = ctx.add(acc, ctx.mul(xi, row))
    return acc


def hermitian_form_values(ctx: FieldCtx, matrix, points: np.ndarray) -> np.ndarray:
    """Vectorized x^T H x^(q) over an (N, n+1) point array."""
    h = np.asarray(matrix, dtype=np.int64)
    y = ctx.vfrob(points)
    acc = np.zeros(len(points), dtype=np.int64)
    for i in range(h.shape[0]):
        row = np.zeros(len(points), dtype=np.int64)
        for j in range(h.shape[1]):
            if h[i, j]:
                row = ctx.vadd(row, ctx.vmul(int(h[i, j]), y[:, j]))
        acc = ctx.vadd(acc, ctx.vmul(points[:, i], row))
    return acc


def hermitian_rank(ctx: FieldCtx, matrix) -> int:
    return matrix_rank(ctx, validate_hermitian(ctx, matrix))


def conjugate_entrywise(ctx: FieldCtx, matrix) -> np.ndarray:
    return ctx.vfrob(np.asarray(matrix, dtype=np.int64))


def congruence_transform(ctx: FieldCtx, matrix, s) -> np.ndarray:
    """S^T H S^(q): the Gram matrix of the form in the basis given by the
    columns of S."""
    h = np.asarray(matrix, dtype=np.int64)
    s = np.asarray(s, dtype=np.int64)
    return mat_mul(ctx, mat_mul(ctx, s.T, h), conjugate_entrywise(ctx, s))


def canonical_congruence(ctx: FieldCtx, matrix) -> tuple[np.ndarray, int]:
    """Invertible S with S^T H S^(q) = diag(1,...,1,0,...,0), plus the rank.

    Sesquilinear symmetric elimination with deterministic pivoting: the
    smallest remaining index with a nonzero diagonal entry is pivoted
    first; when the remaining diagonal vanishes, the lexicographically
    smallest nonzero off-diagonal entry h_ij is used to create a diagonal
    1 by the basis change e_i -> e_i + lam*e_j, where lam solves
    h_ij*lam^q + h_ij^q*lam = 1 through the trace preimage.
    """
    h0 = validate_hermitian(ctx, matrix)
    dim = h0.shape[0]
    a = h0.copy()
    s = identity(dim)

    def add_multiple(target: int, source: int, coeff: int) -> None:
        # basis change v_target += coeff * v_source
        cq = ctx.frob(coeff)
        s[:, target] = ctx.vadd(s[:, target], ctx.vmul(coeff, s[:, source]))
        a[:, target] = ctx.vadd(a[:, target], ctx.vmul(cq, a[:, source]))
        a[target, :] = ctx.vadd(a[target, :], ctx.vmul(coeff, a[source, :]))

    def swap(i: int, j: int) -> None:
        s[:, [i, j]] = s[:, [j, i]]
        a[:, [i, j]] = a[:, [j, i]]
        a[[i, j], :] = a[[j, i], :]

    def scale(i: int, factor: int) -> None:
        fq = ctx.frob(factor)
        s[:, i] = ctx.vmul(factor, s[:, i])
        a[:, i] = ctx.vmul(fq, a[:, i])
        a[i, :] = ctx.vmul(factor, a[i, :])

    t = 0
    while t < dim:
        pivot = next((i for i in range(t, dim) if a[i, i]), None)
        if pivot is None:
            off = next(
                ((i, j) for i in range(t, dim) for j in range(i + 1, dim) if a[i, j]),
                None,
            )
            if off is None:
                break
            i, j = off
            mu = ctx.trace_preimage(1)
            lam = ctx.mul(mu, ctx.inv(ctx.frob(int(a[i, j]))))
            add_multiple(i, j, lam)
            pivot = i
        if pivot != t:
            swap(t, pivot)
        diag = int(a[t, t])
        for j in range(dim):
            if j != t and a[t, j]:
                coeff = ctx.frob(ctx.neg(ctx.div(int(a[t, j]), diag)))
                add_multiple(j, t, coeff)
        scale(t, ctx.inv(ctx.norm_preimage(diag)))
        t += 1

    return s, t


@dataclass(frozen=True)
class LineClass:
    """Line-versus-variety classification: the raw intersection size and
    its tag (tangent = 1, secant = q+1, contained = q^2+1, else unknown)."""

    kind: str
    count: int


class HermitianVariety:
    """A Hermitian variety with its matrix, rank, and (for rank n) vertex.

    Points are materialized lazily, once, in canonical enumeration order.
    Instances are immutable after the point list exists and are safe to
    share between workers.
    """

    def __init__(self, ctx: FieldCtx, matrix):
        self.ctx = ctx
        self.matrix = validate_hermitian(ctx, matrix)
        self.matrix.setflags(write=False)
        self.n = self.matrix.shape[0] - 1
        self.rank = matrix_rank(ctx, self.matrix)
        self.vertex: tuple[int, ...] | None = None
        if self.rank == self.n:
            kernel = nullspace(ctx, self.matrix)
            self.vertex = normalize_vector(ctx, kernel[0])

    @property
    def is_nondegenerate(self) -> bool:
        return self.rank == self.n + 1

    @property
    def is_rank_n_cone(self) -> bool:
        return self.rank == self.n

    @cached_property
    def points(self) -> np.ndarray:
        space = enumerate_points(self.ctx, self.n)
        values = hermitian_form_values(self.ctx, self.matrix, space)
        pts = space[values == 0]
        pts.setflags(write=False)
        return pts

    def contains(self, x) -> bool:
        return evaluate_hermitian_form(self.ctx, self.matrix, x) == 0

    def descriptor(self) -> dict:
        return {
            "n": self.n,
            "p": self.ctx.p,
            "e": self.ctx.e,
            "modulus": list(self.ctx.modulus),
            "matrix": [[int(c) for c in row] for row in self.matrix],
            "rank": self.rank,
            "vertex": list(self.vertex) if self.vertex is not None else None,
        }

    def __repr__(self) -> str:  # pragma: no cover
        return f"HermitianVariety(n={self.n}, rank={self.rank}, q={self.ctx.q})"


def make_standard_cone(ctx: FieldCtx, n: int) -> HermitianVariety:
    """The rank-n cone: diag(1,...,1,0) in P^n, vertex [0:...:0:1]."""
    if n < 1:
        raise ValueError("n must be >= 1")
    h = identity(n + 1)
    h[n, n] = 0
    return HermitianVariety(ctx, h)


def make_nondegenerate(ctx: FieldCtx, n: int) -> HermitianVariety:
    """The standard nondegenerate variety: the identity matrix in P^n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return HermitianVariety(ctx, identity(n + 1))


def count_points_formula(n: int, rank_case: str, q: int) -> int:
    """Closed-form rational point counts: the nondegenerate variety in P^n
    (n >= 0; empty for n = 0), or the rank-n cone (1 + q^2 times the
    nondegenerate count one dimension down)."""
    if rank_case == "nondegenerate":
        if n < 0:
            raise ValueError("n must be >= 0")
        num = (q**n - (-1) ** n) * (q ** (n + 1) - (-1) ** (n + 1))
        return num // (q * q - 1)
    if rank_case == "rank_n_cone":
        if n < 1:
            raise ValueError("n must be >= 1")
        return 1 + q * q * count_points_formula(n - 1, "nondegenerate", q)
    raise ValueError(f"unknown rank_case {rank_case!r}")


def classify_line(ctx: FieldCtx, variety: HermitianVariety, a, b) -> LineClass:
    """Count |line(a,b) intersect variety| and tag it.  For nondegenerate
    varieties only tangent/secant/contained occur; arbitrary varieties may
    yield other counts, reported with kind 'unknown'."""
    pts = line_through(ctx, a, b)
    values = hermitian_form_values(ctx, variety.matrix, pts)
    count = int((values == 0).sum())
    q = ctx.q
    if count == 1:
        kind = "tangent"
    elif count == q + 1:
        kind = "secant"
    elif count == q * q + 1:
        kind = "contained"
    else:
        kind = "unknown"
    return LineClass(kind=kind, count=count)


def tangent_hyperplane(ctx: FieldCtx, variety: HermitianVariety, a) -> tuple[int, ...]:
    """The polar hyperplane at a smooth rational point a: dual vector
    H * a^(q), normalized.  Raises for points off the variety and for the
    cone vertex (where the polar vanishes)."""
    a = normalize_vector(ctx, a)
    if not variety.contains(a):
        raise ValueError("tangent hyperplane requires a point on the variety")
    h = variety.matrix
    aq = [ctx.frob(c) for c in a]
    dual = [0] * (variety.n + 1)
    for i in range(variety.n + 1):
        acc = 0
        for j, yj in enumerate(aq):
            acc = ctx.add(acc, ctx.mul(int(h[i, j]), yj))
        dual[i] = acc
    if not any(dual):
        raise ValueError("point is singular (the cone vertex has no tangent hyperplane)")
    return normalize_vector(ctx, dual)


@dataclass(frozen=True)
class SectionInfo:
    """A hyperplane section of a Hermitian variety: the rank of the
    restricted form, the section's rational point count, and the section
    type (tangent / non_tangent for nondegenerate varieties,
    vertex_avoiding / vertex_incident for rank-n cones)."""

    rank: int
    point_count: int
    kind: str


def _hyperplane_basis(ctx: FieldCtx, dual: tuple[int, ...]) -> np.ndarray:
    """(n+1) x n basis-completion matrix whose columns span the hyperplane
    sum u_i x_i = 0 (dual normalized, so its last nonzero entry is 1)."""
    dim = len(dual)
    last = max(i for i in range(dim) if dual[i])
    cols = [i for i in range(dim) if i != last]
    basis = np.zeros((dim, dim - 1), dtype=np.int64)
    for idx, i in enumerate(cols):
        basis[i, idx] = 1
        basis[last, idx] = ctx.neg(dual[i])
    return basis


def hyperplane_section(ctx: FieldCtx, variety: HermitianVariety, dual) -> SectionInfo:
    """Restrict the form to a hyperplane via basis completion and classify
    the section.  Requires a nondegenerate variety or a rank-n cone."""
    dual = normalize_vector(ctx, dual)
    if len(dual) != variety.n + 1:
        raise ValueError("dimension mismatch between hyperplane and variety")
    if not (variety.is_nondegenerate or variety.is_rank_n_cone):
        raise ValueError("sections are defined for nondegenerate varieties and rank-n cones")
    basis = _hyperplane_basis(ctx, dual)
    restricted = mat_mul(
        ctx, mat_mul(ctx, basis.T, variety.matrix), conjugate_entrywise(ctx, basis)
    )
    section_rank = matrix_rank(ctx, restricted) if restricted.any() else 0
    on_plane = incidence_values(ctx, variety.points, dual) == 0
    count = int(on_plane.sum())
    if variety.is_nondegenerate:
        kind = "tangent" if section_rank == variety.n - 1 else "non_tangent"
    else:
        vertex_on = incidence_values(
            ctx, np.asarray([variety.vertex], dtype=np.int64), dual
        )[0] == 0
        kind = "vertex_incident" if vertex_on else "vertex_avoiding"
    return SectionInfo(rank=section_rank, point_count=count, kind=kind)
