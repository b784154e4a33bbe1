"""Arithmetic in Q(√d)."""
# Standard Library
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

# Oversampling
from oversampling.system.exactnum.quadratic import ComplexQuad
from oversampling.system.exactnum.quadratic import QuadScalar
from oversampling.system.exceptions import RadicandMismatch
from oversampling.tests.test_utils import rationals


quads = st.builds(QuadScalar, rationals(), rationals())


def test_sqrt_squares_to_radicand():
    root = QuadScalar.sqrt(2)
    assert root * root == 2


def test_inverse_square_root():
    """1/√2 is stored as (1/2)·√2."""
    r = QuadScalar(0, Fraction(1, 2))
    assert r * r == Fraction(1, 2)
    assert 1 / QuadScalar.sqrt(2) == r


def test_rational_mixes_with_any_radicand():
    assert QuadScalar(1, 0, 2) + QuadScalar(0, 1, 3) == QuadScalar(1, 1, 3)


def test_radicand_mismatch():
    with pytest.raises(RadicandMismatch):
        QuadScalar.sqrt(2) + QuadScalar.sqrt(3)


def test_non_squarefree_radicand():
    with pytest.raises(ValueError):
        QuadScalar(0, 1, 4)


def test_sign_of_opposite_parts():
    assert QuadScalar(-1, 1).sign() == 1
    assert QuadScalar(2, -1).sign() == 1
    assert QuadScalar(1, -1).sign() == -1
    assert QuadScalar(0, 0).sign() == 0


@given(quads, quads)
def test_ordering_matches_floats(x, y):
    if abs(float(x) - float(y)) > 1e-9:
        assert (x < y) == (float(x) < float(y))


@given(quads, quads, quads)
def test_field_laws(x, y, z):
    assert (x + y) * z == x * z + y * z
    if y:
        assert (x / y) * y == x


def test_complex_modulus():
    z = ComplexQuad(QuadScalar(0, Fraction(1, 2)), QuadScalar(0, Fraction(-1, 2)))
    assert z.abs2() == 1
    assert z.conjugate() * z == ComplexQuad(1, 0)
    assert complex(ComplexQuad(1, 2)) == complex(1, 2)


@given(rationals(), rationals(), st.sampled_from([2, 3, 5, 6, 7]))
def test_product_with_conjugate_is_rational_norm(a, b, d):
    """(a + b√d)(a - b√d) = a² - d·b²."""
    x = QuadScalar(a, b, d)
    product = x * x.conjugate()
    assert product.is_rational()
    assert product == a * a - d * b * b
    assert product == x.norm()


def test_rational_scalars_hash_like_rationals():
    assert hash(QuadScalar(1)) == hash(1)
    assert hash(QuadScalar(Fraction(1, 3), 0, 5)) == hash(Fraction(1, 3))
    assert hash(ComplexQuad(Fraction(2, 3))) == hash(Fraction(2, 3))
    assert {QuadScalar(1): "one"}[1] == "one"
    assert len({QuadScalar(2), 2, ComplexQuad(2)}) == 1
