import math
import random

import pytest

from trisect import (
    MAT2_ID,
    NonPrimitiveError,
    ZeroVectorError,
    is_primitive,
    mat2_apply,
    mat2_det,
    mat2_inv,
    mat2_mul,
    pair2,
    pair4,
    sl2_complete,
    symplectic_reduce,
    transvect,
)

from conftest import rand_primitive_vec2, rand_primitive_vec4


def test_pairing_values():
    assert pair2((-3, 1), (5, -1)) == -2
    assert pair2((1, 0), (0, 1)) == 1
    assert pair4((0, 1, 0, 0), (-1, -1, -1, 1)) == 1
    assert pair4((1, 0, 0, 0), (0, 1, 0, 0)) == 1
    assert pair4((0, 0, 1, 0), (0, 0, 0, 1)) == 1


def test_pairing_antisymmetry_bilinearity():
    rng = random.Random(101)
    for _ in range(10_000):
        v = tuple(rng.randint(-50, 50) for _ in range(2))
        w = tuple(rng.randint(-50, 50) for _ in range(2))
        u = tuple(rng.randint(-50, 50) for _ in range(2))
        assert pair2(v, w) == -pair2(w, v)
        assert pair2(v, v) == 0
        s = rng.randint(-5, 5)
        assert pair2(tuple(a + s * b for a, b in zip(v, u)), w) == pair2(v, w) + s * pair2(u, w)
        v4 = tuple(rng.randint(-50, 50) for _ in range(4))
        w4 = tuple(rng.randint(-50, 50) for _ in range(4))
        u4 = tuple(rng.randint(-50, 50) for _ in range(4))
        assert pair4(v4, w4) == -pair4(w4, v4)
        assert pair4(tuple(a + s * b for a, b in zip(v4, u4)), w4) == pair4(v4, w4) + s * pair4(u4, w4)


def test_transvect_values():
    assert transvect((-3, 1), -1, (0, 1)) == (-9, 4)
    assert transvect((1, 0), -4, (0, 1)) == (-4, 1)
    assert transvect((-1, 1), -1, (1, 0)) == (0, 1)
    # the twist fixes its own core
    assert transvect((-3, 1), 7, (-3, 1)) == (-3, 1)


def test_transvect_preserves_pairing_and_inverts():
    rng = random.Random(202)
    for _ in range(10_000):
        rank = rng.choice((2, 4))
        if rank == 2:
            core = rand_primitive_vec2(rng)
            pairing = pair2
        else:
            core = rand_primitive_vec4(rng, bound=5)
            pairing = pair4
        x = tuple(rng.randint(-30, 30) for _ in range(rank))
        y = tuple(rng.randint(-30, 30) for _ in range(rank))
        k = rng.randint(-5, 5)
        tx, ty = transvect(core, k, x), transvect(core, k, y)
        assert pairing(tx, ty) == pairing(x, y)
        assert transvect(core, -k, tx) == x


def test_transvect_powers_compose():
    rng = random.Random(203)
    for _ in range(2_000):
        core = rand_primitive_vec2(rng)
        x = tuple(rng.randint(-30, 30) for _ in range(2))
        j, k = rng.randint(-4, 4), rng.randint(-4, 4)
        assert transvect(core, j, transvect(core, k, x)) == transvect(core, j + k, x)


def test_sl2_complete_values():
    assert sl2_complete((5, -1)) == ((0, -1), (1, 5))
    assert sl2_complete((0, 1)) == ((0, 1), (-1, 0))
    assert sl2_complete((1, 0)) == MAT2_ID
    assert sl2_complete((3, 1)) == ((0, 1), (-1, 3))
    assert sl2_complete((-1, 0)) == ((-1, 0), (0, -1))


def test_sl2_complete_exhaustive_small():
    # Every primitive vector with entries up to 100: determinant one,
    # v maps to (1, 0), forced second row, Bezout entry in the canonical
    # window.
    for x in range(-100, 101):
        for y in range(-100, 101):
            if (x, y) == (0, 0) or math.gcd(abs(x), abs(y)) != 1:
                continue
            m = sl2_complete((x, y))
            assert mat2_det(m) == 1
            assert mat2_apply(m, (x, y)) == (1, 0)
            assert m[1] == (-y, x)
            u = m[0][0]
            if y == 0:
                assert m[0] == (x, 0)
            else:
                assert -abs(y) < 2 * u <= abs(y)


def test_sl2_complete_errors():
    with pytest.raises(ZeroVectorError):
        sl2_complete((0, 0))
    with pytest.raises(NonPrimitiveError):
        sl2_complete((2, 4))
    with pytest.raises(NonPrimitiveError):
        sl2_complete((2, 0))


def test_is_primitive():
    assert is_primitive((1, 0))
    assert is_primitive((3, 5))
    assert not is_primitive((0, 0))
    assert not is_primitive((2, 4))
    assert is_primitive((0, 1, 0, 0))
    assert not is_primitive((2, 2, 2, 2))


def test_mat2_helpers():
    rng = random.Random(303)
    for _ in range(1_000):
        # Build a unimodular matrix from a random primitive column.
        v = rand_primitive_vec2(rng)
        m = sl2_complete(v)
        assert mat2_mul(m, mat2_inv(m)) == MAT2_ID
        assert mat2_mul(mat2_inv(m), m) == MAT2_ID
    with pytest.raises(ValueError):
        mat2_inv(((2, 0), (0, 1)))


def test_symplectic_reduce_standard_position():
    r = symplectic_reduce((1, 0, 0, 0))
    assert r.basis == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    assert r.project((0, 0, 5, 7)) == (5, 7)
    assert r.project((3, 0, -2, 9)) == (-2, 9)


def test_symplectic_reduce_swapped_block():
    r = symplectic_reduce((0, 0, 1, 0))
    a, f1, e2, f2 = r.basis
    assert a == (0, 0, 1, 0)
    # The projection of a class disjoint from a is a unit vector exactly
    # when the class extends the complement basis.
    p = r.project((0, 1, 0, 0))
    assert sorted(abs(c) for c in p) == [0, 1]


def test_symplectic_reduce_gram_identities():
    rng = random.Random(404)
    for _ in range(1_000):
        a = rand_primitive_vec4(rng, bound=15)
        r = symplectic_reduce(a)
        e1, f1, e2, f2 = r.basis
        assert e1 == a
        assert pair4(e1, f1) == 1
        assert pair4(e2, f2) == 1
        for u, v in ((e1, e2), (e1, f2), (f1, e2), (f1, f2)):
            assert pair4(u, v) == 0
        # projection: exact coordinates in the complement plane
        w = tuple(rng.randint(-20, 20) for _ in range(4))
        w = tuple(wi - pair4(a, w) * fi for wi, fi in zip(w, f1))
        assert pair4(a, w) == 0
        lam2, mu2 = r.project(w)
        lam1 = -pair4(f1, w)
        rebuilt = tuple(
            lam1 * x + lam2 * y + mu2 * z for x, y, z in zip(e1, e2, f2)
        )
        assert rebuilt == w


def test_symplectic_reduce_projection_requires_disjoint():
    r = symplectic_reduce((1, 0, 0, 0))
    with pytest.raises(ValueError):
        r.project((0, 1, 0, 0))


def test_symplectic_reduce_errors():
    with pytest.raises(ZeroVectorError):
        symplectic_reduce((0, 0, 0, 0))
    with pytest.raises(NonPrimitiveError):
        symplectic_reduce((2, 0, 2, 0))
