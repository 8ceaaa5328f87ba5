"""Homogeneous forms of degree d over GF(q^2): monomial bases, evaluation,
projectivized enumeration with deterministic sharding, and products of
linear forms.

The monomial basis is graded-lexicographic with x0 > x1 > ... > xn, so for
fixed degree the exponent tuples appear in descending lex order; a form is
a coefficient vector over that basis.  Projectivization fixes the first
nonzero coefficient to 1, and the global enumeration index space is
partitioned into contiguous segments by the position of that leading 1,
which is what makes contiguous-range sharding a partition of all nonzero
forms up to scalar.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator

import numpy as np

from .field import FieldCtx
from .limits import EVAL_BUDGET, BudgetExceededError

__all__ = [
    "MonomialBasis",
    "HomogeneousForm",
    "monomial_basis",
    "evaluate_form",
    "monomial_values",
    "form_values",
    "intersection_count",
    "projective_form_count",
    "shard_range",
    "segments",
    "coeffs_at_index",
    "iter_coeff_blocks",
    "scan_zero_counts",
    "enumerate_forms_projective",
    "product_of_hyperplanes",
    "projectivize_coeffs",
    "form_to_json",
    "form_from_json",
]


@dataclass(frozen=True)
class MonomialBasis:
    """Ordered exponent tuples of the degree-d monomials in n+1 variables."""

    n: int
    d: int
    exponents: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.exponents)


@dataclass(frozen=True)
class HomogeneousForm:
    basis: MonomialBasis
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != len(self.basis):
            raise ValueError("coefficient vector does not match the basis length")
        if not any(self.coeffs):
            raise ValueError("the zero form is not a valid HomogeneousForm")


def _exponent_tuples(nvars: int, total: int) -> Iterator[tuple[int, ...]]:
    if nvars == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _exponent_tuples(nvars - 1, total - first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def monomial_basis(n: int, d: int) -> MonomialBasis:
    """C(n+d, d) exponent tuples in graded-lex order (x0^d first)."""
    if n < 1 or d < 1:
        raise ValueError("monomial basis requires n >= 1 and d >= 1")
    exps = tuple(_exponent_tuples(n + 1, d))
    assert len(exps) == comb(n + d, d)
    return MonomialBasis(n=n, d=d, exponents=exps)


def evaluate_form(ctx: FieldCtx, form: HomogeneousForm, x) -> int:
    """Sum of coeff_i * x^exponent_i; the point normalization makes the
    value canonical on projective representatives."""
    x = [int(c) for c in x]
    if len(x) != form.basis.n + 1:
        raise ValueError("dimension mismatch between form and point")
    acc = 0
    for coeff, exps in zip(form.coeffs, form.basis.exponents):
        if coeff == 0:
            continue
        term = coeff
        for c, e in zip(x, exps):
            if e:
                term = ctx.mul(term, ctx.pow(c, e))
        acc = ctx.add(acc, term)
    return acc


def _power_table(ctx: FieldCtx, max_degree: int) -> np.ndarray:
    codes = np.arange(ctx.q2, dtype=np.int64)
    table = np.ones((ctx.q2, max_degree + 1), dtype=np.int64)
    for t in range(1, max_degree + 1):
        table[:, t] = ctx.vmul(table[:, t - 1], codes)
    return table


def monomial_values(ctx: FieldCtx, basis: MonomialBasis, points: np.ndarray) -> np.ndarray:
    """(k, m) matrix of monomial values at each point, rows in basis order,
    columns in point order."""
    powers = _power_table(ctx, basis.d)
    out = np.empty((len(basis), len(points)), dtype=np.int64)
    for i, exps in enumerate(basis.exponents):
        acc = np.ones(len(points), dtype=np.int64)
        for var, e in enumerate(exps):
            if e:
                acc = ctx.vmul(acc, powers[points[:, var], e])
        out[i] = acc
    return out


def form_values(ctx: FieldCtx, form: HomogeneousForm, points: np.ndarray) -> np.ndarray:
    powers = _power_table(ctx, form.basis.d)
    acc = np.zeros(len(points), dtype=np.int64)
    for coeff, exps in zip(form.coeffs, form.basis.exponents):
        if coeff == 0:
            continue
        term = np.full(len(points), coeff, dtype=np.int64)
        for var, e in enumerate(exps):
            if e:
                term = ctx.vmul(term, powers[points[:, var], e])
        acc = ctx.vadd(acc, term)
    return acc


def intersection_count(ctx: FieldCtx, form: HomogeneousForm, points: np.ndarray) -> int:
    """Number of points in the list at which the form vanishes."""
    if len(points) == 0:
        return 0
    return int((form_values(ctx, form, points) == 0).sum())


# ---------------------------------------------------------------------------
# Projectivized enumeration: every nonzero form up to scalar exactly once.
# ---------------------------------------------------------------------------

def projective_form_count(q2: int, k: int) -> int:
    return (q2**k - 1) // (q2 - 1)


def segments(q2: int, k: int) -> list[tuple[int, int, int]]:
    """(leading index t, global lo, global hi) for each leading-coefficient
    segment; segment t holds the forms with coeffs[0..t-1] = 0 and
    coeffs[t] = 1."""
    out = []
    lo = 0
    for t in range(k):
        size = q2 ** (k - 1 - t)
        out.append((t, lo, lo + size))
        lo += size
    return out


def shard_range(total: int, shard: tuple[int, int]) -> tuple[int, int]:
    index, count = shard
    if count < 1 or not 0 <= index < count:
        raise ValueError(f"invalid shard {index}/{count}")
    return (total * index) // count, (total * (index + 1)) // count


def coeffs_at_index(q2: int, k: int, g: int) -> tuple[int, ...]:
    """Coefficient tuple of the projectivized form with global index g."""
    for t, lo, hi in segments(q2, k):
        if lo <= g < hi:
            s = g - lo
            coeffs = [0] * k
            coeffs[t] = 1
            for pos in range(k - 1, t, -1):
                coeffs[pos] = s % q2
                s //= q2
            return tuple(coeffs)
    raise IndexError(f"form index {g} out of range")


def iter_coeff_blocks(
    ctx: FieldCtx, k: int, lo: int, hi: int, block: int = 1 << 15
) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (global start index, (B, k) coefficient array) covering the
    global index range [lo, hi) in order."""
    q2 = ctx.q2
    for t, seg_lo, seg_hi in segments(q2, k):
        s0, s1 = max(lo, seg_lo), min(hi, seg_hi)
        for b0 in range(s0, s1, block):
            b1 = min(b0 + block, s1)
            suffix = np.arange(b0 - seg_lo, b1 - seg_lo, dtype=np.int64)
            coeffs = np.zeros((b1 - b0, k), dtype=np.int64)
            coeffs[:, t] = 1
            for pos in range(t + 1, k):
                div = q2 ** (k - 1 - pos)
                coeffs[:, pos] = (suffix // div) % q2
            yield b0, coeffs


def scan_zero_counts(
    ctx: FieldCtx, values: np.ndarray, lo: int, hi: int, block: int = 1 << 15
) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (global start index, per-form zero counts) for every
    projectivized coefficient vector with global index in [lo, hi),
    evaluated against the (k, m) value matrix."""
    k, m = values.shape
    q2 = ctx.q2
    for t, seg_lo, seg_hi in segments(q2, k):
        s0, s1 = max(lo, seg_lo), min(hi, seg_hi)
        for b0 in range(s0, s1, block):
            b1 = min(b0 + block, s1)
            suffix = np.arange(b0 - seg_lo, b1 - seg_lo, dtype=np.int64)
            acc = np.broadcast_to(values[t], (b1 - b0, m)).copy()
            for pos in range(t + 1, k):
                div = q2 ** (k - 1 - pos)
                digits = (suffix // div) % q2
                acc = ctx.vadd(acc, ctx.vmul(digits[:, None], values[pos][None, :]))
            yield b0, (acc == 0).sum(axis=1)


def enumerate_forms_projective(
    ctx: FieldCtx,
    n: int,
    d: int,
    shard: tuple[int, int] = (0, 1),
    budget: int = EVAL_BUDGET,
) -> Iterator[HomogeneousForm]:
    """All nonzero degree-d forms up to scalar (first nonzero coefficient 1),
    restricted to the given contiguous shard of the global index space.
    Shards with the same total partition the forms exactly."""
    basis = monomial_basis(n, d)
    total = projective_form_count(ctx.q2, len(basis))
    lo, hi = shard_range(total, shard)
    if hi - lo > budget:
        raise BudgetExceededError(
            f"shard holds {hi - lo} forms > budget {budget}; shard further or override"
        )
    for start, block in iter_coeff_blocks(ctx, len(basis), lo, hi):
        for row in block:
            yield HomogeneousForm(basis=basis, coeffs=tuple(int(c) for c in row))


def product_of_hyperplanes(ctx: FieldCtx, duals) -> HomogeneousForm:
    """Coefficient vector of the product of the given linear forms; its zero
    set is the union of the hyperplanes."""
    duals = [list(map(int, u)) for u in duals]
    if not duals:
        raise ValueError("product_of_hyperplanes requires at least one hyperplane")
    nvars = len(duals[0])
    if any(len(u) != nvars for u in duals):
        raise ValueError("hyperplane duals must share one dimension")
    zero = tuple([0] * nvars)
    coeff_map: dict[tuple[int, ...], int] = {zero: 1}
    for dual in duals:
        nxt: dict[tuple[int, ...], int] = {}
        for exps, c in coeff_map.items():
            for var, u in enumerate(dual):
                if u == 0:
                    continue
                key = list(exps)
                key[var] += 1
                key = tuple(key)
                nxt[key] = ctx.add(nxt.get(key, 0), ctx.mul(c, u))
        coeff_map = nxt
    basis = monomial_basis(nvars - 1, len(duals))
    coeffs = tuple(coeff_map.get(exps, 0) for exps in basis.exponents)
    return HomogeneousForm(basis=basis, coeffs=coeffs)


def projectivize_coeffs(ctx: FieldCtx, coeffs) -> tuple[int, ...]:
    """Scale a nonzero coefficient vector so its first nonzero entry is 1."""
    coeffs = [int(c) for c in coeffs]
    lead = next((c for c in coeffs if c), None)
    if lead is None:
        raise ValueError("cannot projectivize the zero form")
    if lead == 1:
        return tuple(coeffs)
    s = ctx.inv(lead)
    return tuple(ctx.mul(s, c) for c in coeffs)


def form_to_json(form: HomogeneousForm) -> dict:
    return {"n": form.basis.n, "d": form.basis.d, "coeffs": list(form.coeffs)}


def form_from_json(payload: dict) -> HomogeneousForm:
    basis = monomial_basis(int(payload["n"]), int(payload["d"]))
    return HomogeneousForm(basis=basis, coeffs=tuple(int(c) for c in payload["coeffs"]))
