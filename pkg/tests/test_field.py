"""Field tower arithmetic, checked against an independent polynomial-model
oracle and hand-computed tables for GF(4) and GF(9)."""

import numpy as np
import pytest

from hermcodes import BudgetExceededError, make_field

# -- independent oracle: direct polynomial arithmetic over GF(p) ------------


def poly_digits(code, p, width):
    return [(code // p**i) % p for i in range(width)]


def poly_code(digits, p):
    return sum(c * p**i for i, c in enumerate(digits))


def oracle_mul(a, b, modulus, p):
    width = len(modulus) - 1
    da, db = poly_digits(a, p, width), poly_digits(b, p, width)
    prod = [0] * (2 * width - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    # reduce by the monic modulus
    for top in range(len(prod) - 1, width - 1, -1):
        lead = prod[top]
        if lead:
            for i, c in enumerate(modulus):
                prod[top - width + i] = (prod[top - width + i] - lead * c) % p
    return poly_code(prod[:width], p)


def oracle_add(a, b, p, width):
    return poly_code(
        [(x + y) % p for x, y in zip(poly_digits(a, p, width), poly_digits(b, p, width))], p
    )


# -- construction ------------------------------------------------------------


def test_smallest_moduli():
    assert make_field(2, 1).modulus == (1, 1, 1)  # x^2 + x + 1
    assert make_field(3, 1).modulus == (1, 0, 1)  # x^2 + 1
    assert make_field(2, 2).modulus == (1, 1, 0, 0, 1)  # x^4 + x + 1
    assert make_field(5, 1).modulus == (2, 0, 1)  # x^2 + 2


def test_make_field_rejects_bad_input():
    with pytest.raises(ValueError):
        make_field(4, 1)
    with pytest.raises(ValueError):
        make_field(2, 0)
    with pytest.raises(BudgetExceededError):
        make_field(2, 11)  # 2^22 over the table limit


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_arithmetic_matches_polynomial_oracle(p, e):
    ctx = make_field(p, e)
    width = 2 * e
    for a in range(ctx.q2):
        for b in range(ctx.q2):
            assert ctx.mul(a, b) == oracle_mul(a, b, list(ctx.modulus), p)
            assert ctx.add(a, b) == oracle_add(a, b, p, width)


def test_gf4_hand_tables(gf4):
    # codes: 0, 1, w = 2, w^2 = 3 with w^2 + w + 1 = 0
    assert gf4.generator == 2
    assert gf4.mul(2, 2) == 3 and gf4.mul(2, 3) == 1 and gf4.mul(3, 3) == 2
    assert gf4.add(2, 3) == 1
    assert [gf4.frob(a) for a in range(4)] == [0, 1, 3, 2]
    assert [gf4.norm(a) for a in range(4)] == [0, 1, 1, 1]
    assert [gf4.trace(a) for a in range(4)] == [0, 0, 1, 1]
    assert gf4.base_embed == (0, 1)
    assert gf4.conjugation_maps(0) == (0, 0, 0)
    assert gf4.conjugation_maps(2) == (3, 1, 1)  # w -> (w^2, w^3 = 1, w + w^2 = 1)


def test_gf9_hand_tables(gf9):
    # codes a + 3b for a + b*x with x^2 = -1
    assert gf9.mul(3, 3) == 2  # x * x = -1
    assert gf9.inv(2) == 2
    assert gf9.add(4, 5) == 6  # (1+x) + (2+x) = 2x
    assert gf9.trace(3) == 0 and gf9.trace(1) == 2 and gf9.trace(4) == 2
    assert gf9.base_embed == (0, 1, 2)
    assert gf9.generator == 4  # 1 + x has multiplicative order 8


def test_gf16_subfield(gf16):
    assert gf16.q == 4 and gf16.q2 == 16
    assert gf16.base_embed == (0, 1, 6, 7)
    # norm maps GF(16)* onto GF(4)* with fibers of size q + 1 = 5
    norms = [gf16.norm(a) for a in range(1, 16)]
    assert set(norms) == set(gf16.base_embed) - {0}
    assert all(norms.count(b) == 5 for b in set(norms))


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2)])
def test_inverses_and_pow(p, e):
    ctx = make_field(p, e)
    for a in range(ctx.q2):
        assert ctx.add(a, ctx.neg(a)) == 0
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1
            assert ctx.pow(a, ctx.q2 - 1) == 1
            assert ctx.pow(a, -1) == ctx.inv(a)
        acc = 1
        for k in range(5):
            assert ctx.pow(a, k) == acc
            acc = ctx.mul(acc, a)
    with pytest.raises(ZeroDivisionError):
        ctx.inv(0)
    with pytest.raises(ZeroDivisionError):
        ctx.div(1, 0)


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2)])
def test_conjugation_properties(p, e):
    ctx = make_field(p, e)
    fixed = tuple(a for a in range(ctx.q2) if ctx.frob(a) == a)
    assert fixed == ctx.base_embed
    assert len(fixed) == ctx.q
    for a in range(ctx.q2):
        assert ctx.frob(ctx.frob(a)) == a
        assert ctx.in_base_field(ctx.norm(a))
        assert ctx.in_base_field(ctx.trace(a))
        for b in range(ctx.q2):
            assert ctx.norm(ctx.mul(a, b)) == ctx.mul(ctx.norm(a), ctx.norm(b))


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1)])
def test_preimage_solvers_exhaustive(p, e):
    ctx = make_field(p, e)
    q = ctx.q
    for b in ctx.base_embed:
        if b:
            sols = [a for a in range(1, ctx.q2) if ctx.norm(a) == b]
            assert len(sols) == q + 1
            assert ctx.norm_preimage(b) == min(sols)
        sols = [a for a in range(ctx.q2) if ctx.trace(a) == b]
        assert len(sols) == q
        assert ctx.trace_preimage(b) == min(sols)


def test_preimage_examples(gf4, gf9):
    assert gf4.norm_preimage(1) == 1
    assert gf4.trace_preimage(0) == 0
    assert gf4.trace_preimage(1) == 2  # w, the smaller of {w, w^2}
    assert gf9.norm_preimage(2) == 4  # (1+x)^4 = 2, smallest such code
    with pytest.raises(ValueError):
        gf4.norm_preimage(0)
    with pytest.raises(ValueError):
        gf4.norm_preimage(2)  # w is not in GF(2)
    with pytest.raises(ValueError):
        gf9.trace_preimage(3)  # x is not in GF(3)


def test_vectorized_matches_scalar(gf9):
    codes = np.arange(gf9.q2)
    a, b = np.meshgrid(codes, codes, indexing="ij")
    vm = gf9.vmul(a, b)
    va = gf9.vadd(a, b)
    for i in range(gf9.q2):
        for j in range(gf9.q2):
            assert vm[i, j] == gf9.mul(i, j)
            assert va[i, j] == gf9.add(i, j)
    assert np.array_equal(gf9.vfrob(codes), np.array([gf9.frob(int(c)) for c in codes]))


def test_descriptor_roundtrip(gf4):
    desc = gf4.descriptor()
    assert desc == {"p": 2, "e": 1, "modulus": [1, 1, 1]}
    assert gf4.modulus_token() == "1,1,1"
