from decimal import Decimal, getcontext
from fractions import Fraction
from functools import reduce

import pytest
from hypothesis import given, strategies as st

from treespec import algebra
from treespec.algebra import A, B, C, D, I, FeasVec, Mat2, mat_apply, mat_mul
from treespec.errors import BothZero, NegativeEntry


def test_named_constants():
    assert A == Mat2(1, 1, 0, 1)
    assert B == Mat2(2, 0, 1, 2)
    assert C == Mat2(2, 1, 1, 1)
    assert D == Mat2(1, 0, 1, 1)
    assert [m.det() for m in (A, B, C, D)] == [1, 4, 1, 1]


def test_mat_mul_examples():
    assert mat_mul(A, D) == C
    assert mat_mul(A, A) == Mat2(1, 2, 0, 1)
    assert mat_mul(I, B) == B
    assert A @ D == C


def test_mat_apply_examples():
    assert mat_apply(A, (2, 1)) == (3, 1)
    assert mat_apply(B, (2, 1)) == (4, 4)
    assert mat_apply(C, (1, 0)) == (2, 1)


def test_mat_apply_negative():
    with pytest.raises(NegativeEntry):
        mat_apply(Mat2(1, -1, 0, 1), (0, 1))


@pytest.mark.parametrize("a,b,g", [(3, 5, 1), (4, 6, 2), (1, 0, 1), (0, 7, 7), (-4, 6, 2), (240, 46, 2)])
def test_ext_gcd(a, b, g):
    gg, x, y = algebra.ext_gcd(a, b)
    assert gg == g
    assert a * x + b * y == g


def test_ext_gcd_identity_case():
    assert algebra.ext_gcd(1, 0) == (1, 1, 0)
    assert algebra.ext_gcd(3, 5) == (1, 2, -1)


def test_ext_gcd_both_zero():
    with pytest.raises(BothZero):
        algebra.ext_gcd(0, 0)


def test_count_simple_words():
    assert [algebra.count_simple_words(n) for n in (0, 1, 10)] == [1, 2, 1024]


def _series_coefficients(count):
    # long division of 1 by 1 - 2x - x^2
    coeffs = []
    for n in range(count):
        c = 1 if n == 0 else 0
        if n >= 1:
            c += 2 * coeffs[n - 1]
        if n >= 2:
            c += coeffs[n - 2]
        coeffs.append(c)
    return coeffs


def _count_block_words(n):
    # direct count of sequences of blocks (weight 1: one block; weight k>=2: two)
    ways = [1] + [0] * n
    for total in range(1, n + 1):
        ways[total] = sum(ways[total - w] * (1 if w == 1 else 2) for w in range(1, total + 1))
    return sum(ways)


def test_count_full_words_examples():
    assert algebra.count_full_words(0) == 1
    assert algebra.count_full_words(2) == 5
    assert algebra.count_full_words(4) == 29


def test_count_full_words_matches_series_and_enumeration():
    series = _series_coefficients(40)
    for n in range(40):
        assert algebra.count_full_words(n) == series[n]
    for n in range(12):
        assert algebra.count_full_words(n) == _count_block_words(n)


def test_count_full_words_closed_form():
    getcontext().prec = 80
    root2 = Decimal(2).sqrt()
    for n in range(31):
        closed = (1 + root2) ** (n + 1) / (2 * root2)
        assert algebra.count_full_words(n) == int(closed.to_integral_value())


def test_mat_pow():
    assert algebra.mat_pow(A, 5) == Mat2(1, 5, 0, 1)
    assert algebra.mat_pow(B, 0) == I
    assert algebra.mat_pow(B, 3) == mat_mul(B, mat_mul(B, B))


words = st.lists(st.sampled_from([A, B, C, D]), max_size=12)


@given(words, words)
def test_apply_is_associative(left, right):
    m = algebra.mat_prod(left)
    n = algebra.mat_prod(right)
    v = FeasVec(1, 0)
    assert mat_apply(mat_mul(m, n), v) == mat_apply(m, mat_apply(n, v))


@given(words)
def test_det_multiplicative(ws):
    expected = reduce(lambda acc, m: acc * m.det(), ws, 1)
    assert algebra.mat_prod(ws).det() == expected


def test_feasvec_tau():
    assert FeasVec(3, 1).tau == 4
    assert FeasVec(3, 1) == (3, 1)
    assert Fraction(*FeasVec(3, 1)) == 3
