"""
Exact 2x2 integer matrix arithmetic and the counting formulas behind the
planar constructions.

The four named matrices act on column vectors (t, u) where t counts the
spanning trees through the witness edge and u the trees avoiding it:

    A = [[1,1],[0,1]]   subdivide the witness edge
    B = [[2,0],[1,2]]   glue a triangle, keep the witness
    C = [[2,1],[1,1]]   glue a triangle, move the witness onto it
    D = [[1,0],[1,1]]

Python ints are unbounded, so nothing here can overflow.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import BothZero, NegativeEntry


class Mat2(NamedTuple):
    a11: int
    a12: int
    a21: int
    a22: int

    def __matmul__(self, other):
        if isinstance(other, Mat2):
            return mat_mul(self, other)
        return NotImplemented

    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    def rows(self):
        return [[self.a11, self.a12], [self.a21, self.a22]]


class FeasVec(NamedTuple):
    """(t, u) = (tau(G/e), tau(G-e)); first coordinate is always the contraction count."""

    t: int
    u: int

    @property
    def tau(self) -> int:
        return self.t + self.u


I = Mat2(1, 0, 0, 1)
A = Mat2(1, 1, 0, 1)
B = Mat2(2, 0, 1, 2)
C = Mat2(2, 1, 1, 1)
D = Mat2(1, 0, 1, 1)

NAMED = {"A": A, "B": B, "C": C, "D": D}

UNIT = FeasVec(1, 0)


def mat_mul(m: Mat2, n: Mat2) -> Mat2:
    return Mat2(
        m.a11 * n.a11 + m.a12 * n.a21,
        m.a11 * n.a12 + m.a12 * n.a22,
        m.a21 * n.a11 + m.a22 * n.a21,
        m.a21 * n.a12 + m.a22 * n.a22,
    )


def mat_pow(m: Mat2, k: int) -> Mat2:
    if k < 0:
        raise ValueError("negative exponent")
    result = I
    base = m
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def mat_prod(ms: Iterable[Mat2]) -> Mat2:
    result = I
    for m in ms:
        result = mat_mul(result, m)
    return result


def mat_apply(m: Mat2, v) -> FeasVec:
    """Matrix-vector product; raises NegativeEntry if a coordinate goes below zero."""
    t, u = v
    r = FeasVec(m.a11 * t + m.a12 * u, m.a21 * t + m.a22 * u)
    if r.t < 0 or r.u < 0:
        raise NegativeEntry(f"{m} applied to {tuple(v)} gives {tuple(r)}")
    return r


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y == g."""
    if a == 0 and b == 0:
        raise BothZero("ext_gcd(0, 0) is undefined")
    x0, y0, x1, y1 = 1, 0, 0, 1
    r0, r1 = a, b
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if r0 < 0:
        r0, x0, y0 = -r0, -x0, -y0
    return r0, x0, y0


def count_simple_words(n: int) -> int:
    """Number of words A^a1 C ... A^at C of weight at most n (balls and bins: 2**n)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return 1 << n


def count_full_words(n: int) -> int:
    """Number of block words over {A^a C, B^a C} of total weight at most n.

    These are the coefficients of 1/(1 - 2x - x^2), computed with the integer
    recurrence m_n = 2 m_{n-1} + m_{n-2}, m_0 = 1, m_1 = 2.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    prev, cur = 1, 2
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, 2 * cur + prev
    return cur
