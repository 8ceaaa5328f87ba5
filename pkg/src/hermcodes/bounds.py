"""Intersection bounds for Hermitian varieties against hypersurfaces of
degree d <= q, extremal-configuration constructors, structural checkers for
the maximizers, and the exhaustive maximization oracle.

Bound values carry provenance.  Known theorem-grade values exist for the
plane curve case (Bezout), the Hermitian surface (Sorensen), linear and
quadric sections in every dimension, and cubic sections for q >= 7; other
cells are Unknown and stay Unknown unless the caller explicitly asks for
the conjectured closed forms, which are tagged as such and never promoted.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import FieldCtx
from .forms import (
    HomogeneousForm,
    coeffs_at_index,
    form_values,
    intersection_count,
    monomial_basis,
    monomial_values,
    product_of_hyperplanes,
    projective_form_count,
    projectivize_coeffs,
    scan_zero_counts,
    shard_range,
)
from .hermitian import (
    HermitianVariety,
    classify_line,
    count_points_formula,
    make_nondegenerate,
    tangent_hyperplane,
)
from .limits import EVAL_BUDGET, MAXIMIZER_CAP, BudgetExceededError
from .projspace import enumerate_points, enumerate_hyperplanes, incidence_values, line_through

__all__ = [
    "BoundValue",
    "serre_bound",
    "sorensen_max",
    "known_max_intersection",
    "conjectured_max_intersection",
    "cone_bound",
    "plane_cone_bound",
    "ExtremalWitness",
    "construct_extremal_form",
    "OracleResult",
    "bruteforce_max_intersection",
    "merge_oracle_results",
    "check_union_of_cone_lines",
    "is_cone_with_vertex",
]


@dataclass(frozen=True)
class BoundValue:
    """An intersection bound: its integer value (None when unknown),
    provenance grade, and a descriptive source tag."""

    value: int | None
    provenance: str  # "theorem" | "conjecture" | "unknown"
    source: str

    @property
    def is_unknown(self) -> bool:
        return self.value is None


def _nondeg_count(j: int, q: int) -> int:
    return count_points_formula(j, "nondegenerate", q)


def _check_degree(d: int, q: int) -> None:
    if d < 1 or d > q:
        raise ValueError(f"degree d = {d} outside the regime 1 <= d <= q = {q}")


def serre_bound(n: int, d: int, field_size: int) -> int:
    """Maximum rational points of a degree-d hypersurface in P^n over a
    field of the given size, d <= size; attained exactly by d hyperplanes
    through a common codimension-2 flat."""
    if d < 1 or d > field_size:
        raise ValueError(f"degree d = {d} outside the regime d <= field size {field_size}")
    from .projspace import pi_count

    return d * field_size ** (n - 1) + pi_count(n - 2, field_size)


def sorensen_max(d: int, q: int) -> int:
    """Exact maximum of |U_3 intersect V(F)| over degree-d surfaces,
    d <= q: d(q^3 + q^2 - q) + q + 1."""
    _check_degree(d, q)
    return d * (q**3 + q**2 - q) + q + 1


def known_max_intersection(n: int, d: int, q: int) -> BoundValue:
    """Theorem-grade maximum of |U_n intersect V(F)| over degree-d
    hypersurfaces in P^n, where known; Unknown otherwise (d = 3 needs
    q >= 7 for n >= 4; d >= 4 is open for n >= 4)."""
    if n < 2:
        raise ValueError("known_max_intersection requires n >= 2")
    _check_degree(d, q)
    if n == 2:
        return BoundValue(d * (q + 1), "theorem", "bezout-plane-curve")
    if n == 3:
        return BoundValue(sorensen_max(d, q), "theorem", "sorensen")
    even = n % 2 == 0
    if d == 1:
        value = _nondeg_count(n - 1, q) if even else q * q * _nondeg_count(n - 2, q) + 1
        return BoundValue(value, "theorem", "hyperplane-section")
    if d == 2:
        if even:
            value = 2 * _nondeg_count(n - 1, q) - _nondeg_count(n - 2, q)
        else:
            value = (2 * q * q - 1) * _nondeg_count(n - 2, q) + 2
        return BoundValue(value, "theorem", "quadric-section")
    if d == 3 and q >= 7:
        if even:
            value = 3 * _nondeg_count(n - 1, q) - 2 * _nondeg_count(n - 2, q)
        else:
            value = (3 * q * q - 2) * _nondeg_count(n - 2, q) + 3
        return BoundValue(value, "theorem", "cubic-section")
    return BoundValue(None, "unknown", "open-for-this-degree")


def conjectured_max_intersection(n: int, d: int, q: int) -> BoundValue:
    """The conjectural closed form for the maximum (n >= 3), tagged with
    conjecture provenance; never substituted into theorem-grade outputs."""
    if n < 3:
        raise ValueError("conjectured_max_intersection requires n >= 3")
    _check_degree(d, q)
    if n % 2 == 0:
        value = d * _nondeg_count(n - 1, q) - (d - 1) * _nondeg_count(n - 2, q)
    else:
        value = (d * q * q - d + 1) * _nondeg_count(n - 2, q) + d
    return BoundValue(value, "conjecture", "edoukou-ling-xing")


def cone_bound(n: int, d: int, q: int, assume_conjecture: bool = False) -> BoundValue:
    """Upper bound for |rank-n cone intersect V(F)|, n >= 3: the larger of
    the vertex-avoiding-hyperplane branch and 1 + q^2 * (max over the base
    variety).  Unknown base maxima propagate unless assume_conjecture."""
    if n < 3:
        raise ValueError("cone_bound requires n >= 3 (use plane_cone_bound for n = 2)")
    _check_degree(d, q)
    base = known_max_intersection(n - 1, d, q)
    if base.is_unknown and assume_conjecture:
        base = conjectured_max_intersection(n - 1, d, q)
    if base.is_unknown:
        return BoundValue(None, "unknown", f"needs-open-base-maximum:{base.source}")
    hyperplane_branch = _nondeg_count(n - 1, q) + (d - 1) * (q + 1) * q ** (2 * n - 4)
    cone_branch = 1 + q * q * base.value
    return BoundValue(max(hyperplane_branch, cone_branch), base.provenance, base.source)


def plane_cone_bound(d: int, q: int) -> int:
    """Exact maximum of |plane cone intersect V(F)| over degree-d curves,
    d <= q: d*q^2 + 1, attained exactly by unions of d generator lines."""
    _check_degree(d, q)
    return d * q * q + 1


# ---------------------------------------------------------------------------
# Extremal witnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalWitness:
    """A form attaining an intersection bound against the standard cone,
    with the attained count and a structural description tag."""

    form: HomogeneousForm
    predicted_count: int
    description: str


def _generator_line_dual(ctx: FieldCtx, base_point) -> list[int]:
    # Line of P^2 through [0:0:1] and the base point [a:b:0]: dual (b, -a, 0).
    a, b = int(base_point[0]), int(base_point[1])
    return [b, ctx.neg(a), 0]


def _concurrent_secant_duals(ctx: FieldCtx, base: HermitianVariety, d: int) -> list[tuple[int, ...]]:
    """Duals of d concurrent secant lines of the base plane curve, through
    the first exterior point in enumeration order."""
    space = enumerate_points(ctx, base.n)
    exterior = next(tuple(int(c) for c in p) for p in space if not base.contains(p))
    duals = []
    for dual in enumerate_hyperplanes(ctx, base.n):
        dual = tuple(int(c) for c in dual)
        if incidence_values(ctx, np.asarray([exterior], dtype=np.int64), dual)[0] != 0:
            continue
        on_line = incidence_values(ctx, base.points, dual) == 0
        if int(on_line.sum()) == ctx.q + 1:
            duals.append(dual)
            if len(duals) == d:
                return duals
    raise RuntimeError("geometry bug: fewer secant lines through the exterior point than d")


def _tangent_plane_duals_through_secant(
    ctx: FieldCtx, base: HermitianVariety, d: int
) -> list[tuple[int, ...]]:
    """Duals of d tangent planes of the base surface taken at d points of
    the first secant chord in enumeration order; such planes share the
    polar line of the chord, which is secant."""
    pts = base.points
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            cls = classify_line(ctx, base, pts[i], pts[j])
            if cls.kind != "secant":
                continue
            chord = line_through(ctx, pts[i], pts[j])
            on_variety = [
                tuple(int(c) for c in x)
                for x in chord
                if base.contains(x)
            ]
            assert len(on_variety) == ctx.q + 1
            return [tangent_hyperplane(ctx, base, x) for x in on_variety[:d]]
    raise RuntimeError("geometry bug: no secant chord found on the base surface")


def construct_extremal_form(ctx: FieldCtx, variety: HermitianVariety, d: int) -> ExtremalWitness:
    """Construct a degree-d form attaining the exact intersection bound for
    the standard rank-n cone, n in {2, 3, 4}.

    The extremal configuration is built inside the vertex-avoiding
    hyperplane x_n = 0 against the base variety (d generator base points
    for n = 2; d concurrent secant lines through an exterior point for
    n = 3; d tangent planes through a common secant line for n = 4) and
    coned by omitting x_n from every linear factor.
    """
    q = ctx.q
    _check_degree(d, q)
    n = variety.n
    if not variety.is_rank_n_cone or variety.vertex != tuple([0] * n + [1]):
        raise ValueError("witness construction expects the standard cone (vertex last)")
    if n == 2:
        base = make_nondegenerate(ctx, 1)
        duals3 = [_generator_line_dual(ctx, p) for p in base.points[:d]]
        lifted = duals3
        predicted = plane_cone_bound(d, q)
        description = f"union-of-{d}-generator-lines"
    elif n == 3:
        base = make_nondegenerate(ctx, 2)
        duals = _concurrent_secant_duals(ctx, base, d)
        lifted = [list(u) + [0] for u in duals]
        predicted = 1 + q * q * d * (q + 1)
        description = f"cone-over-{d}-concurrent-secant-lines"
    elif n == 4:
        base = make_nondegenerate(ctx, 3)
        duals = _tangent_plane_duals_through_secant(ctx, base, d)
        lifted = [list(u) + [0] for u in duals]
        predicted = 1 + q * q * sorensen_max(d, q)
        description = f"cone-over-{d}-tangent-planes-through-secant"
    else:
        raise ValueError("witness construction covers n in {2, 3, 4}")
    form = product_of_hyperplanes(ctx, lifted)
    form = HomogeneousForm(basis=form.basis, coeffs=projectivize_coeffs(ctx, form.coeffs))
    attained = intersection_count(ctx, form, variety.points)
    if attained != predicted:
        raise RuntimeError(
            f"geometry bug: witness attains {attained}, predicted {predicted}"
        )
    return ExtremalWitness(form=form, predicted_count=predicted, description=description)


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OracleResult:
    """Exact maximum of the intersection count over a contiguous shard of
    all projectivized degree-d forms, with every maximizer (list capped,
    exact tally always reported)."""

    n: int
    d: int
    q2: int
    k: int
    n_points: int
    total_forms: int
    lo: int
    hi: int
    max_count: int
    n_maximizers: int
    maximizers: tuple[tuple[int, ...], ...]
    cap: int


def bruteforce_max_intersection(
    ctx: FieldCtx,
    target,
    n: int,
    d: int,
    shard: tuple[int, int] = (0, 1),
    budget: int = EVAL_BUDGET,
    cap: int = MAXIMIZER_CAP,
    block: int = 1 << 15,
) -> OracleResult:
    """Exact global maximum of |target points intersect V(F)| over all
    projectivized degree-d forms in the shard, plus every maximizing form.

    ``target`` is a HermitianVariety or a raw (N, n+1) point array.  The
    scan is a pure map over contiguous index ranges followed by a
    deterministic (max, argmax-merge) reduction, so any sharding that
    partitions the index space yields the same merged answer.
    """
    points = target.points if isinstance(target, HermitianVariety) else np.asarray(target)
    basis = monomial_basis(n, d)
    k = len(basis)
    total = projective_form_count(ctx.q2, k)
    lo, hi = shard_range(total, shard)
    evals = (hi - lo) * len(points)
    if evals > budget:
        raise BudgetExceededError(
            f"scan needs {evals} form evaluations > budget {budget}; shard or override"
        )
    values = monomial_values(ctx, basis, points)
    best = -1
    n_max = 0
    kept: list[tuple[int, ...]] = []
    for start, zeros in scan_zero_counts(ctx, values, lo, hi, block=block):
        block_best = int(zeros.max())
        if block_best > best:
            best = block_best
            n_max = 0
            kept = []
        if block_best == best:
            idx = np.nonzero(zeros == best)[0]
            n_max += int(idx.size)
            for off in idx:
                if len(kept) >= cap:
                    break
                kept.append(coeffs_at_index(ctx.q2, k, start + int(off)))
    return OracleResult(
        n=n,
        d=d,
        q2=ctx.q2,
        k=k,
        n_points=len(points),
        total_forms=total,
        lo=lo,
        hi=hi,
        max_count=best,
        n_maximizers=n_max,
        maximizers=tuple(kept),
        cap=cap,
    )


def merge_oracle_results(parts: list[OracleResult]) -> OracleResult:
    """Merge contiguous shard results into the result for their combined
    index range.  Merging is associative, so any grouping of the shards of
    a full run reproduces the unsharded answer."""
    if not parts:
        raise ValueError("nothing to merge")
    parts = sorted(parts, key=lambda r: r.lo)
    head = parts[0]
    for r in parts:
        if (r.n, r.d, r.q2, r.k, r.n_points, r.total_forms, r.cap) != (
            head.n, head.d, head.q2, head.k, head.n_points, head.total_forms, head.cap
        ):
            raise ValueError("shard results disagree on the scan configuration")
    for prev, cur in zip(parts, parts[1:]):
        if prev.hi != cur.lo:
            raise ValueError("shards are not contiguous")
    best = max(r.max_count for r in parts)
    n_max = sum(r.n_maximizers for r in parts if r.max_count == best)
    kept: list[tuple[int, ...]] = []
    for r in parts:
        if r.max_count != best:
            continue
        for c in r.maximizers:
            if len(kept) >= head.cap:
                break
            kept.append(c)
    return OracleResult(
        n=head.n,
        d=head.d,
        q2=head.q2,
        k=head.k,
        n_points=head.n_points,
        total_forms=head.total_forms,
        lo=parts[0].lo,
        hi=parts[-1].hi,
        max_count=best,
        n_maximizers=n_max,
        maximizers=tuple(kept),
        cap=head.cap,
    )


# ---------------------------------------------------------------------------
# Structural checkers for maximizers
# ---------------------------------------------------------------------------


def check_union_of_cone_lines(
    ctx: FieldCtx, variety: HermitianVariety, form: HomogeneousForm
) -> tuple[bool, int]:
    """Whether the intersection of the form's zero set with the rank-n cone
    is a union of full generator lines through the vertex, and how many.
    The vertex lies on every generator line, so it never counts separately."""
    if not variety.is_rank_n_cone:
        raise ValueError("checker requires a rank-n cone")
    zeros = form_values(ctx, form, variety.points) == 0
    zset = {tuple(int(c) for c in p) for p in variety.points[zeros]}
    if not zset:
        return True, 0
    vertex = variety.vertex
    if vertex not in zset:
        return False, 0
    if len(zset) == 1:
        return False, 0
    covered = {vertex}
    n_lines = 0
    for x in sorted(zset):
        if x in covered:
            continue
        line = {tuple(int(c) for c in p) for p in line_through(ctx, vertex, x)}
        if not line <= zset:
            return False, n_lines
        covered |= line
        n_lines += 1
    return True, n_lines


def is_cone_with_vertex(ctx: FieldCtx, form: HomogeneousForm, vertex) -> bool:
    """True iff the form's zero set in P^n is a union of full lines through
    the given vertex: every rational zero other than the vertex extends to
    a line of zeros through it."""
    n = form.basis.n
    space = enumerate_points(ctx, n)
    zeros = form_values(ctx, form, space) == 0
    zset = {tuple(int(c) for c in p) for p in space[zeros]}
    vertex = tuple(int(c) for c in vertex)
    covered = {vertex}
    for x in sorted(zset):
        if x in covered:
            continue
        line = {tuple(int(c) for c in p) for p in line_through(ctx, vertex, x)}
        if not line <= zset:
            return False
        covered |= line
    return True
