"""The weak oversampling condition, its shifted variant and the equivalence battery."""
# Standard Library
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

# Oversampling
from oversampling.system.conditions import Certificate
from oversampling.system.conditions import DilationSpec
from oversampling.system.conditions import Status
from oversampling.system.conditions import check_strong
from oversampling.system.conditions import check_support_weak
from oversampling.system.conditions import check_weak
from oversampling.system.conditions import prop36_battery
from oversampling.system.exceptions import Unsupported
from oversampling.system.lattice import Lattice
from oversampling.tests.test_utils import EXPANSIVE_2X2
from oversampling.tests.test_utils import superlattices_of_integers


def test_weak_violation_at_negative_scale():
    verdict = check_weak(DilationSpec.scalar(Fraction(3, 2)), Lattice.scaled(Fraction(1, 2)), 5)
    assert verdict.is_violated
    assert verdict.witness == {"m": (2,), "j": -1}


def test_weak_violation_for_integer_dilation():
    verdict = check_weak(DilationSpec.scalar(2), Lattice.scaled(Fraction(1, 4)), 5)
    assert verdict.witness == {"m": (4,), "j": 1}


def test_shift_repairs_weak_condition():
    verdict = check_support_weak(DilationSpec.scalar(2), Lattice.scaled(Fraction(1, 4)), 2, 5)
    assert verdict.status is Status.CERTIFIED_HOLDS
    assert verdict.certificate is Certificate.LCM_1D


def test_bounded_weak_verdict():
    """Coprime non-integer oversampling passes the scan without a certificate."""
    verdict = check_weak(DilationSpec.scalar(Fraction(3, 2)), Lattice.scaled(Fraction(1, 5)), 4)
    assert verdict.status is Status.HOLDS_UP_TO
    assert verdict.bound == 4


def test_verdict_has_no_truth_value():
    verdict = check_weak(DilationSpec.scalar(2), Lattice.scaled(Fraction(1, 3)), 2)
    with pytest.raises(TypeError):
        bool(verdict)


def test_battery_when_statements_hold():
    report = prop36_battery(DilationSpec.scalar(2), Lattice.scaled(Fraction(1, 3)), 6)
    assert report.consistent
    assert report.strong


def test_battery_when_statements_fail():
    report = prop36_battery(DilationSpec.scalar(2), Lattice.scaled(Fraction(1, 2)), 6)
    assert report.consistent
    assert not any(report.as_dict().values())


def test_battery_needs_integer_dilation():
    with pytest.raises(Unsupported):
        prop36_battery(DilationSpec.scalar(Fraction(3, 2)), Lattice.scaled(Fraction(1, 5)), 6)


def test_quincunx_dilation():
    quincunx = DilationSpec([[1, 1], [-1, 1]])
    assert quincunx.expansive
    report = prop36_battery(quincunx, Lattice.scaled(Fraction(1, 3), 2), 6)
    assert report.consistent


@pytest.mark.slow
@settings(max_examples=500, deadline=None)
@given(st.sampled_from(EXPANSIVE_2X2), superlattices_of_integers(2))
def test_six_statements_agree(matrix, lattice):
    """Independent evaluations of the equivalent statements never disagree."""
    report = prop36_battery(DilationSpec(matrix), lattice, 6)
    assert report.consistent, report.as_dict()


ONE_DIMENSIONAL = [Fraction(2), Fraction(3), Fraction(3, 2), Fraction(5, 2), Fraction(4, 3), Fraction(5, 3)]


@settings(max_examples=100, deadline=None)
@given(st.one_of(
    st.tuples(st.sampled_from(ONE_DIMENSIONAL).map(DilationSpec.scalar), superlattices_of_integers(1, 12)),
    st.tuples(st.sampled_from(EXPANSIVE_2X2).map(DilationSpec), superlattices_of_integers(2)),
))
def test_certified_strong_is_never_weakly_violated(case):
    dilation, lattice = case
    if check_strong(dilation, lattice, 4).status is Status.CERTIFIED_HOLDS:
        assert not check_weak(dilation, lattice, 4).is_violated
