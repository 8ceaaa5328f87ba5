import numpy as np
import pytest

from hermcodes.linalg import identity, mat_mul, matrix_rank, nullspace, row_reduce
from hermcodes.verify import random_invertible


def reference_mat_mul(ctx, a, b):
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for i in range(a.shape[0]):
        for j in range(b.shape[1]):
            acc = 0
            for k in range(a.shape[1]):
                acc = ctx.add(acc, ctx.mul(int(a[i, k]), int(b[k, j])))
            out[i, j] = acc
    return out


def test_rank_basics(gf4):
    assert matrix_rank(gf4, identity(4)) == 4
    assert matrix_rank(gf4, np.diag([1, 1, 0]).astype(np.int64)) == 2
    assert matrix_rank(gf4, np.zeros((3, 3), dtype=np.int64)) == 0
    # rows 2 and 3 are scalar multiples of row 1
    m = np.array([[1, 2, 3], [2, 3, 1], [3, 1, 2]])
    assert matrix_rank(gf4, m) == 1


def test_rank_invariant_under_invertible_transform(gf9):
    rng = np.random.default_rng(7)
    base = np.zeros((4, 4), dtype=np.int64)
    base[0, 0] = base[1, 1] = 1
    for _ in range(10):
        s = random_invertible(gf9, 4, rng)
        t = random_invertible(gf9, 4, rng)
        assert matrix_rank(gf9, mat_mul(gf9, mat_mul(gf9, s, base), t)) == 2


@pytest.mark.parametrize("shape", [(3, 3), (4, 6), (5, 3)])
def test_mat_mul_matches_reference(gf4, shape):
    rng = np.random.default_rng(11)
    a = rng.integers(0, 4, size=shape).astype(np.int64)
    b = rng.integers(0, 4, size=(shape[1], 4)).astype(np.int64)
    assert np.array_equal(mat_mul(gf4, a, b), reference_mat_mul(gf4, a, b))


def test_nullspace_is_kernel(gf9):
    rng = np.random.default_rng(3)
    for _ in range(10):
        m = rng.integers(0, 9, size=(3, 5)).astype(np.int64)
        basis = nullspace(gf9, m)
        assert basis.shape[0] == 5 - matrix_rank(gf9, m)
        for vec in basis:
            assert not mat_mul(gf9, m, vec[:, None]).any()


def test_row_reduce_pivots(gf4):
    # rows 1 and 2 are independent; row 3 = 3 * row 1 would be (0,1,3)
    m = np.array([[0, 2, 1], [0, 3, 2], [0, 1, 2]])
    rref, pivots = row_reduce(gf4, m)
    assert pivots == [1, 2]
    for row, col in enumerate(pivots):
        assert rref[row, col] == 1
        assert not rref[np.arange(3) != row, col].any()
