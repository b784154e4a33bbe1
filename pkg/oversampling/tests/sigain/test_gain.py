"""Shift-invariance gain, classes of integer dilations and the oversampling cross-check."""
# Standard Library
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings

# Oversampling
from oversampling.system.conditions import Certificate
from oversampling.system.conditions import DilationSpec
from oversampling.system.conditions import Status
from oversampling.system.exceptions import BadDilation
from oversampling.system.exceptions import NotSublattice
from oversampling.system.exceptions import Unsupported
from oversampling.system.lattice import Lattice
from oversampling.system.sigain import INFINITE_CLASS
from oversampling.system.sigain import RegionSet
from oversampling.system.sigain import behera_class
from oversampling.system.sigain import candidate_shifts
from oversampling.system.sigain import oversample_crosscheck
from oversampling.system.sigain import oversample_with_support
from oversampling.system.sigain import overlapping_shifts
from oversampling.system.sigain import si_gain_check
from oversampling.system.sigain import support_condition
from oversampling.system.sigain.regions import shannon_support
from oversampling.tests.test_utils import region_sets


TWO = DilationSpec.scalar(2)

QUINCUNX = DilationSpec.from_rows([[1, -1], [1, 1]])

#: Integer dilations per dimension for the nesting check
NESTING_DILATIONS = {1: [TWO], 2: [DilationSpec.scalar(2, 2), QUINCUNX]}


def test_candidate_order(box_pair_region):
    assert candidate_shifts(box_pair_region) == [(1,), (-1,), (2,), (-2,)]


def test_overlapping_shifts(box_pair_region):
    assert overlapping_shifts(box_pair_region) == [((2,), 1), ((-2,), 1)]


def test_fig1_support_gain(fig1_support):
    """Oversampling fig1 by 2 would need the support to avoid its translate by 3."""
    verdict = si_gain_check(fig1_support, Lattice.scaled(Fraction(1, 2)))
    assert verdict.is_violated
    assert verdict.witness == {"k": [3], "measure": Fraction(1, 2)}


def test_gain_on_integers_always_holds(fig1_support):
    assert si_gain_check(fig1_support, Lattice.integer(1)).status is Status.HOLDS


def test_gain_needs_superlattice(box_pair_region):
    with pytest.raises(NotSublattice):
        si_gain_check(box_pair_region, Lattice.scaled(2))


def test_shannon_class_is_infinite():
    assert behera_class(shannon_support(), TWO, 8) == INFINITE_CLASS
    assert math.isinf(behera_class(shannon_support(), TWO, 8))


def test_box_pair_class(box_pair_region):
    assert behera_class(box_pair_region, TWO, 8) == 1


def test_class_one_support(class_one):
    assert behera_class(RegionSet.from_generators(class_one), TWO, 8) == 1


def test_class_bounded_by_r_max():
    region = RegionSet.intervals([(0, 1), (8, 9)])
    assert behera_class(region, TWO, 2) == 2
    assert behera_class(region, TWO, 8) == 3


def test_class_needs_integer_dilation(box_pair_region):
    with pytest.raises(Unsupported):
        behera_class(box_pair_region, DilationSpec.scalar(Fraction(3, 2)), 4)


def test_class_in_two_dimensions():
    region = RegionSet(2, [((0, 0), (1, 1)), ((2, 0), (3, 1))])
    assert behera_class(region, DilationSpec.scalar(2, 2), 4) == 1


def test_support_condition(box_pair_region):
    assert support_condition(box_pair_region, TWO, 0).status is Status.HOLDS
    assert support_condition(box_pair_region, TWO, 1).status is Status.HOLDS
    verdict = support_condition(box_pair_region, TWO, 2)
    assert verdict.witness == {"k": [2], "measure": 1}


def test_oversampling_with_support(box_pair_region):
    verdict = oversample_with_support(box_pair_region, TWO, Lattice.scaled(Fraction(1, 3)), 1, 5)
    assert verdict.status is Status.CERTIFIED_HOLDS
    assert verdict.certificate is Certificate.PROP36
    assert "Oversampled lattice" in verdict.notes[-1]


def test_oversampling_blocked_by_support(box_pair_region):
    verdict = oversample_with_support(box_pair_region, TWO, Lattice.scaled(Fraction(1, 3)), 2, 5)
    assert verdict.witness["condition"] == "support"


def test_oversampling_blocked_by_lattice(box_pair_region):
    verdict = oversample_with_support(box_pair_region, TWO, Lattice.scaled(Fraction(1, 2)), 0, 5)
    assert verdict.witness["condition"] == "lattice"


def test_crosscheck_shannon(shannon):
    report = oversample_crosscheck(shannon, 2, 3)
    assert report.behera_class == INFINITE_CLASS
    assert [row.s for row in report.rows] == [1, 2, 3]
    assert all(row.parseval.status is Status.HOLDS for row in report.rows)
    assert report.agrees


def test_crosscheck_class_one(class_one):
    report = oversample_crosscheck(class_one, 2, 2)
    assert report.behera_class == 1
    assert [row.parseval.is_holding for row in report.rows] == [True, False]
    assert report.agrees


def test_crosscheck_refuses_fractional_dilation(fig1):
    with pytest.raises(BadDilation):
        oversample_crosscheck(fig1, 2, 1)


def test_crosscheck_needs_semi_orthogonal(shannon):
    with pytest.raises(Unsupported):
        oversample_crosscheck(shannon, 2, 1, semi_orthogonal=False)


@given(region_sets(dims=(1,)))
def test_gain_is_monotone_in_lattice(region):
    """Invariance under (1/4)Z implies invariance under (1/2)Z."""
    if si_gain_check(region, Lattice.scaled(Fraction(1, 4))).status is Status.HOLDS:
        assert si_gain_check(region, Lattice.scaled(Fraction(1, 2))).status is Status.HOLDS


@settings(max_examples=50, deadline=None)
@given(region_sets())
def test_gain_nesting_matches_class(region):
    """Invariance under ``A^(-r)Zⁿ`` holds exactly for ``r`` up to the class."""
    for dilation in NESTING_DILATIONS[region.dim]:
        found = behera_class(region, dilation, 4)
        for r in range(5):
            verdict = si_gain_check(region, Lattice(dilation.power(-r)))
            assert verdict.is_holding == (r <= found), (dilation, r, found)
