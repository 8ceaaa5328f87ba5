import numpy as np
import pytest

from hermcodes import BudgetExceededError, make_field, pi_count
from hermcodes.projspace import (
    _enumerate_points_raw,
    enumerate_hyperplanes,
    enumerate_points,
    export_points_csv,
    incidence,
    incidence_values,
    line_through,
    normalize_vector,
)
from hermcodes.limits import POINT_BUDGET


def test_pi_count_values():
    assert pi_count(-1, 4) == 0
    assert pi_count(0, 4) == 1
    assert pi_count(2, 4) == 21
    assert pi_count(4, 9) == 7381
    with pytest.raises(ValueError):
        pi_count(-2, 4)


def test_projective_line_gf4(gf4):
    pts = enumerate_points(gf4, 1)
    assert pts.tolist() == [[0, 1], [1, 0], [1, 1], [2, 1], [3, 1]]


@pytest.mark.parametrize("p,e,n", [(2, 1, 2), (2, 1, 4), (3, 1, 2), (3, 1, 4)])
def test_point_counts_and_normalization(p, e, n):
    ctx = make_field(p, e)
    pts = enumerate_points(ctx, n)
    assert len(pts) == pi_count(n, ctx.q2)
    as_tuples = [tuple(row) for row in pts.tolist()]
    assert len(set(as_tuples)) == len(pts)
    assert as_tuples == sorted(as_tuples)  # canonical lexicographic order
    for row in pts:
        nz = [c for c in row if c]
        assert nz and row[max(i for i, c in enumerate(row) if c)] == 1


def test_enumeration_reproducible(gf4):
    a = _enumerate_points_raw(gf4, 2, POINT_BUDGET)
    b = _enumerate_points_raw(gf4, 2, POINT_BUDGET)
    assert np.array_equal(a, b)
    assert np.array_equal(a, enumerate_points(gf4, 2))


def test_enumeration_budget(gf4):
    with pytest.raises(BudgetExceededError):
        _enumerate_points_raw(gf4, 3, budget=10)


def test_normalize_vector(gf4):
    assert normalize_vector(gf4, (0, 2, 0)) == (0, 1, 0)
    assert normalize_vector(gf4, (2, 3, 0)) == (3, 1, 0)  # scale by inv(3) = 2
    with pytest.raises(ValueError):
        normalize_vector(gf4, (0, 0, 0))


def test_incidence_basics(gf4):
    assert incidence(gf4, (0, 0, 1), (1, 0, 0))  # [0:0:1] on x0 = 0
    assert not incidence(gf4, (1, 0, 0), (1, 0, 0))
    with pytest.raises(ValueError):
        incidence(gf4, (1, 0), (1, 0, 0))


def test_incidence_counts_plane(gf4):
    pts = enumerate_points(gf4, 2)
    hyps = enumerate_hyperplanes(gf4, 2)
    assert len(hyps) == 21
    per_point = np.zeros(len(pts), dtype=int)
    for h in hyps:
        mask = incidence_values(gf4, pts, h) == 0
        assert int(mask.sum()) == pi_count(1, 4)  # each line holds 5 points
        per_point += mask
    assert (per_point == pi_count(1, 4)).all()  # each point on 5 lines


@pytest.mark.parametrize("p,n", [(2, 2), (2, 4), (3, 2)])
def test_hyperplanes_missing_a_point(p, n):
    ctx = make_field(p, 1)
    fixed = enumerate_points(ctx, n)[0]
    missing = sum(
        1
        for h in enumerate_hyperplanes(ctx, n)
        if incidence_values(ctx, fixed[None, :], h)[0] != 0
    )
    assert missing == ctx.q2**n


def test_two_point_hyperplane_count(gf4):
    # through two fixed points of P^4 there are pi_2 hyperplanes, so a point
    # pair splits the pi_3 hyperplanes through one of them as q^6 + pi_2
    pts = enumerate_points(gf4, 4)
    a, b = pts[0], pts[100]
    through_a = [
        h for h in enumerate_hyperplanes(gf4, 4) if incidence_values(gf4, a[None, :], h)[0] == 0
    ]
    both = sum(1 for h in through_a if incidence_values(gf4, b[None, :], h)[0] == 0)
    assert len(through_a) == pi_count(3, 4)
    assert both == pi_count(2, 4)
    assert len(through_a) - both == 4**3


def test_line_through(gf4, gf9):
    pts = enumerate_points(gf4, 2)
    line = line_through(gf4, pts[0], pts[1])
    assert line.shape == (5, 3)
    assert np.array_equal(line, line_through(gf4, pts[1], pts[0]))
    with pytest.raises(ValueError):
        line_through(gf4, pts[0], pts[0])
    # collinearity: the line lies on every hyperplane through both points
    for h in enumerate_hyperplanes(gf4, 2):
        if (
            incidence_values(gf4, pts[0][None, :], h)[0] == 0
            and incidence_values(gf4, pts[1][None, :], h)[0] == 0
        ):
            assert (incidence_values(gf4, line, h) == 0).all()
    pts9 = enumerate_points(gf9, 2)
    rng = np.random.default_rng(5)
    for _ in range(10):
        i, j = rng.choice(len(pts9), size=2, replace=False)
        line9 = line_through(gf9, pts9[i], pts9[j])
        assert len(line9) == 10
        assert np.array_equal(line9, line_through(gf9, pts9[j], pts9[i]))


def test_export_points_csv(gf4, tmp_path):
    pts = enumerate_points(gf4, 1)
    path = tmp_path / "points.csv"
    export_points_csv(gf4, 1, pts, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "# n=1 p=2 e=1 modulus=1,1,1"
    assert lines[1:] == ["0,1", "1,0", "1,1", "2,1", "3,1"]
