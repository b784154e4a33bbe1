"""Exact step functions."""
# Standard Library
from fractions import Fraction

import pytest
from hypothesis import given

# Oversampling
from oversampling.system.exactnum.quadratic import ComplexQuad
from oversampling.system.exactnum.quadratic import QuadScalar
from oversampling.system.frames import StepFunction
from oversampling.tests.test_utils import step_functions


def test_canonical_form_merges_equal_neighbours():
    merged = StepFunction([0, 1, 2], [3, 3])
    assert merged == StepFunction.indicator(0, 2, 3)
    assert merged.breakpoints == [0, 2]


def test_zero_pieces_cancel():
    f = StepFunction.indicator(0, 1) - StepFunction.indicator(0, 1)
    assert f.is_zero()
    assert not f


def test_bad_breakpoints():
    with pytest.raises(ValueError):
        StepFunction([1, 0], [1])
    with pytest.raises(ValueError):
        StepFunction([0, 1], [1, 2])


def test_support_and_distances():
    f = StepFunction.from_pieces([(-2, -1, 1), (Fraction(1, 2), 1, 2), (1, 3, 5)])
    assert f.support() == [(-2, -1), (Fraction(1, 2), 3)]
    assert f.max_abs == 3
    assert f.min_abs == Fraction(1, 2)
    assert f.away_from_zero()
    assert not StepFunction.indicator(-1, 1).away_from_zero()


def test_dilate_and_translate():
    f = StepFunction.indicator(1, 2)
    assert f.dilate(2) == StepFunction.indicator(Fraction(1, 2), 1)
    assert f.dilate(-1) == StepFunction.indicator(-2, -1)
    assert f.translate(3) == StepFunction.indicator(4, 5)
    with pytest.raises(ValueError):
        f.dilate(0)


def test_integrate_with_radicals():
    r = QuadScalar(0, Fraction(1, 2))
    f = StepFunction.from_pieces([(0, Fraction(3, 2), r)])
    assert f.integrate() == ComplexQuad(QuadScalar(0, Fraction(3, 4)), 0)
    assert f.abs2().integrate() == Fraction(3, 4)


def test_periodic_evaluation_folds_argument():
    periodic = StepFunction.indicator(1, Fraction(3, 2), 1).with_period(Fraction(3, 2))
    assert periodic(Fraction(9, 4)) == 1
    assert periodic(Fraction(2, 3)) == 1
    assert periodic(0) == 0


def test_first_deviation():
    f = StepFunction.from_pieces([(0, 1, 1), (1, 2, 2)])
    assert f.first_deviation(ComplexQuad(1, 0)) == (Fraction(1), Fraction(2), ComplexQuad(2, 0))
    assert StepFunction.zero().first_deviation(ComplexQuad(0, 0)) is None


@given(step_functions(), step_functions())
def test_integral_is_linear(f, g):
    assert (f + g).integrate() == f.integrate() + g.integrate()
    assert (f - f).is_zero()


@given(step_functions())
def test_dilation_scales_integral(f):
    assert f.dilate(Fraction(3, 2)).integrate() * Fraction(3, 2) == f.integrate()


def test_periodic_evaluation_on_negative_endpoints():
    """The negative period is ``[-a, -1)``: ``-1`` folds onto ``-a``."""
    periodic = StepFunction.indicator(Fraction(-3, 2), Fraction(-5, 4), 1).with_period(Fraction(3, 2))
    assert periodic(-1) == 1
    assert periodic(Fraction(-3, 2)) == 1
    assert periodic(Fraction(-9, 4)) == 1
    assert periodic(Fraction(-5, 4)) == 0
