"""Exact integer symplectic linear algebra on Z^2 and Z^4.

Vectors are plain int tuples, so all arithmetic is arbitrary precision.
The rank-2 pairing is the determinant form; the rank-4 pairing is the
block sum of two copies on coordinates (x1, y1, x2, y2).  Conventions:

    pair2((v1, v2), (w1, w2)) = v1*w2 - v2*w1
    transvect(c, k, x) = x + k * pair(c, x) * c

so transvect(c, 1, .) is the right-handed Dehn twist about a curve with
homology class c, and transvect(c, -k, .) inverts transvect(c, k, .).
"""

from __future__ import annotations

import math

Vec2 = tuple[int, int]
Vec4 = tuple[int, int, int, int]
Mat2 = tuple[Vec2, Vec2]  # rows


class ZeroVectorError(ValueError):
    """A primitive class was required but the zero vector was supplied."""


class NonPrimitiveError(ValueError):
    """A primitive class was required; the gcd of the entries exceeds 1."""


def pair2(v: Vec2, w: Vec2) -> int:
    """Algebraic intersection number of two classes on the torus."""
    return v[0] * w[1] - v[1] * w[0]


def pair4(v: Vec4, w: Vec4) -> int:
    """Intersection pairing on the genus-2 surface, block sum of pair2."""
    return (v[0] * w[1] - v[1] * w[0]) + (v[2] * w[3] - v[3] * w[2])


def _pair(v, w) -> int:
    if len(v) == 2:
        return pair2(v, w)
    return pair4(v, w)


def transvect(core, k: int, x):
    """Apply the k-th power of the transvection along core to x.

    Rank 2 and rank 4 inputs are both accepted; core and x must have the
    same length.  k = +1 is the right-handed Dehn twist about core, and
    transvect(core, -k, transvect(core, k, x)) == x since the core pairs
    to zero with itself.
    """
    m = k * _pair(core, x)
    return tuple(xi + m * ci for xi, ci in zip(x, core))


def is_primitive(v) -> bool:
    """True when the entries of v have gcd exactly 1 (so v is nonzero)."""
    return math.gcd(*(abs(c) for c in v)) == 1


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    # Returns (g, u, v) with u*a + v*b = g and g = gcd(a, b) >= 0.
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def mat2_apply(m: Mat2, v: Vec2) -> Vec2:
    return (m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1])


def mat2_mul(a: Mat2, b: Mat2) -> Mat2:
    return (
        (a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]),
        (a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]),
    )


def mat2_det(m: Mat2) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def mat2_inv(m: Mat2) -> Mat2:
    """Inverse of a determinant +-1 integer matrix (exact)."""
    d = mat2_det(m)
    if d not in (1, -1):
        raise ValueError("matrix is not unimodular")
    return ((d * m[1][1], -d * m[0][1]), (-d * m[1][0], d * m[0][0]))


MAT2_ID: Mat2 = ((1, 0), (0, 1))


def sl2_complete(v: Vec2) -> Mat2:
    """Canonical determinant-1 matrix sending v to (1, 0).

    The second row is forced to (-y, x) by the determinant condition, and
    the Bezout coefficient in the first row is reduced into the window
    (-|y|/2, |y|/2], which pins the matrix uniquely.  Raises
    ZeroVectorError on v = 0 and NonPrimitiveError when gcd(x, y) > 1.
    """
    x, y = v
    if x == 0 and y == 0:
        raise ZeroVectorError("cannot complete the zero vector")
    g, u, w = _xgcd(x, y)
    if g != 1:
        raise NonPrimitiveError(f"{v} is not primitive (gcd {g})")
    if y != 0:
        m = abs(y)
        u %= m
        if 2 * u > m:
            u -= m
        w = (1 - u * x) // y
    else:
        u, w = x, 0
    return ((u, w), (-y, x))


def _solve_unit_functional(c: tuple[int, ...]) -> tuple[int, ...]:
    # Deterministic integer solution u of sum(c[i]*u[i]) == 1; requires c
    # primitive.  Built by chaining extended gcds through the coordinates.
    g = 0
    u = [0] * len(c)
    for i, ci in enumerate(c):
        if ci == 0:
            continue
        g2, s, t = _xgcd(g, ci)
        u = [s * x for x in u]
        u[i] += t
        g = g2
    if g != 1:
        raise NonPrimitiveError(f"functional {c} is not primitive (gcd {g})")
    return tuple(u)


def _echelon_basis(rows: list[Vec4]) -> list[Vec4]:
    # Integer row echelon basis of the lattice the rows generate, by
    # column-wise gcd elimination.  Each combining step acts on a row pair
    # by a determinant-one matrix, so the span is preserved exactly; the
    # result has strictly increasing positive pivots and is deterministic
    # in the input order.
    work = [list(r) for r in rows if any(r)]
    out: list[list[int]] = []
    for col in range(4):
        rest = [r for r in work if r[col] == 0]
        sel = [r for r in work if r[col] != 0]
        if not sel:
            work = rest
            continue
        pivot = sel[0]
        for r in sel[1:]:
            g, s, t = _xgcd(pivot[col], r[col])
            merged = [s * pi + t * ri for pi, ri in zip(pivot, r)]
            remainder = [
                (pivot[col] // g) * ri - (r[col] // g) * pi
                for pi, ri in zip(pivot, r)
            ]
            pivot = merged
            if any(remainder):
                rest.append(remainder)
        if pivot[col] < 0:
            pivot = [-c for c in pivot]
        out.append(pivot)
        work = rest
    return [tuple(b) for b in out]


class SymplecticReduction:
    """Symplectic basis (e1, f1, e2, f2) of Z^4 with e1 a chosen class.

    Gram identities: pair4(e1, f1) = pair4(e2, f2) = 1 and the four cross
    pairings vanish.  For any w with pair4(e1, w) = 0 the coordinates of
    w in the complement plane span(e2, f2) are returned by project(); this
    is the class of w in the surgered torus.
    """

    def __init__(self, a: Vec4):
        if not any(a):
            raise ZeroVectorError("cannot reduce along the zero class")
        if not is_primitive(a):
            raise NonPrimitiveError(f"{a} is not primitive")
        # pair4(a, w) as a functional in w has this coefficient vector.
        cf = (-a[1], a[0], -a[3], a[2])
        f1 = _solve_unit_functional(cf)
        # Project the standard basis onto the symplectic complement of
        # span(a, f1), then extract a lattice basis of the image.
        imgs = []
        for i in range(4):
            e = tuple(1 if j == i else 0 for j in range(4))
            m1, m2 = pair4(a, e), pair4(f1, e)
            imgs.append(tuple(ei - m1 * fi + m2 * ai for ei, fi, ai in zip(e, f1, a)))
        comp = _echelon_basis(imgs)
        if len(comp) != 2:
            raise AssertionError("complement rank is not 2")
        e2, f2 = comp
        eps = pair4(e2, f2)
        if eps == -1:
            e2, f2 = f2, e2
        elif eps != 1:
            raise AssertionError("complement pairing is not unimodular")
        self.basis: tuple[Vec4, Vec4, Vec4, Vec4] = (a, f1, e2, f2)

    def project(self, w: Vec4) -> Vec2:
        """Class of w in the surgered torus; w must be disjoint from e1."""
        a, _f1, e2, f2 = self.basis
        if pair4(a, w) != 0:
            raise ValueError(f"{w} is not disjoint from the surgery class {a}")
        return (-pair4(f2, w), pair4(e2, w))


def symplectic_reduce(a: Vec4) -> SymplecticReduction:
    """Complete a primitive class to a symplectic basis, see SymplecticReduction."""
    return SymplecticReduction(a)
