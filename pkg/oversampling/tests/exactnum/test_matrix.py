"""Rational matrices and integer normal forms."""
# Standard Library
from fractions import Fraction

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

# Oversampling
from oversampling.system.exactnum import matrix as mx
from oversampling.system.exactnum.normalforms import elementary_divisors
from oversampling.system.exactnum.normalforms import hnf
from oversampling.system.exactnum.normalforms import snf
from oversampling.system.exactnum.normalforms import xgcd
from oversampling.system.exceptions import RankError
from oversampling.tests.test_utils import nonsingular_matrices


int_matrices = st.integers(1, 3).flatmap(
    lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n))


def _sympy_det(m) -> Fraction:
    value = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in m]).det()
    return Fraction(int(value.p), int(value.q))


@given(nonsingular_matrices(3))
def test_det_matches_sympy(m):
    assert mx.det(m) == _sympy_det(m)


@given(nonsingular_matrices(2))
def test_inverse(m):
    assert mx.matmul(m, mx.inverse(m)) == mx.identity(2, Fraction(1))


def test_singular_inverse():
    with pytest.raises(RankError):
        mx.inverse([[1, 2], [2, 4]])


def test_negative_power_inverts():
    m = mx.rat_matrix([[2, 1], [0, 3]])
    assert mx.matmul(mx.matpow(m, 2), mx.matpow(m, -2)) == mx.identity(2, Fraction(1))


@given(st.integers(-50, 50), st.integers(-50, 50))
def test_xgcd(a, b):
    g, x, y = xgcd(a, b)
    assert g >= 0
    assert a * x + b * y == g


def test_hnf_example():
    h, u = hnf(((2, 4, 4), (-6, 6, 12)))
    assert h == ((2, 0), (0, 6))
    stacked = mx.matmul(((2, 4, 4), (-6, 6, 12)), u)
    assert [row[2] for row in stacked] == [0, 0]
    assert abs(mx.det(u)) == 1


@given(int_matrices)
@settings(max_examples=60)
def test_hnf_shape(m):
    if mx.det(m) == 0:
        with pytest.raises(RankError):
            hnf(m)
        return
    h, u = hnf(m)
    n = len(m)
    assert mx.matmul(m, u) == h
    assert abs(mx.det(u)) == 1
    for i in range(n):
        assert h[i][i] > 0
        assert all(h[i][j] == 0 for j in range(i + 1, n))
        assert all(0 <= h[i][j] < h[i][i] for j in range(i))


@given(int_matrices)
@settings(max_examples=60)
def test_snf_against_sympy(m):
    if mx.det(m) == 0:
        return
    d, u, v = snf(m)
    assert mx.matmul(mx.matmul(u, m), v) == d
    divisors = elementary_divisors(m)
    assert all(b % a == 0 for a, b in zip(divisors, divisors[1:]))
    oracle = smith_normal_form(sympy.Matrix(m), domain=sympy.ZZ)
    assert [abs(int(oracle[i, i])) for i in range(len(m))] == list(divisors)
