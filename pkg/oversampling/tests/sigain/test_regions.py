"""Unions of rational boxes and their overlaps."""
# Standard Library
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

# Oversampling
from oversampling.system.exceptions import DimError
from oversampling.system.exceptions import InputError
from oversampling.system.frames import builtin
from oversampling.system.sigain import RegionSet
from oversampling.system.sigain import overlap_measure
from oversampling.tests.test_utils import region_sets


def test_adjacent_intervals_merge():
    assert RegionSet.intervals([(0, 1), (1, 2)]) == RegionSet.intervals([(0, 2)])


def test_empty_boxes_dropped():
    region = RegionSet.intervals([(1, 1), (2, 3)])
    assert region.boxes == (((2,), (3,)),)


def test_overlapping_boxes_refused():
    with pytest.raises(InputError) as e:
        RegionSet.intervals([(0, 2), (1, 3)])
    assert e.value.path == "$.boxes"


def test_box_dimension_checked():
    with pytest.raises(InputError):
        RegionSet(2, [((0,), (1,))])


def test_support_of_fig1(fig1, fig1_support):
    assert RegionSet.from_generators(fig1) == fig1_support
    assert fig1_support.measure == Fraction(11, 6)


def test_support_of_class_one():
    region = RegionSet.from_generators(builtin("class-one"))
    expected = RegionSet.intervals([
        (Fraction(-1, 8), Fraction(-1, 16)), (Fraction(21, 64), Fraction(5, 8)), (1, Fraction(5, 4)),
        (Fraction(5, 2), Fraction(21, 8)), (5, Fraction(21, 4))])
    assert region == expected


def test_overlap_examples(fig1_support, box_pair_region):
    assert overlap_measure(fig1_support, (2,)) == Fraction(1, 3)
    assert overlap_measure(box_pair_region, (2,)) == 1
    assert overlap_measure(box_pair_region, (1,)) == 0


def test_two_dimensional_overlap():
    square = RegionSet(2, [((0, 0), (2, 2))])
    assert overlap_measure(square, (1, 1)) == 1
    assert square.extent == (2, 2)
    with pytest.raises(DimError):
        square.translate((1,))


@given(region_sets(), st.data())
def test_overlap_is_symmetric(region, data):
    k = tuple(data.draw(st.lists(st.integers(-4, 4), min_size=region.dim, max_size=region.dim)))
    assert overlap_measure(region, k) == overlap_measure(region, tuple(-c for c in k))
    assert overlap_measure(region, (0,) * region.dim) == region.measure
    assert overlap_measure(region, k) <= region.measure
