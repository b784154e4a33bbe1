"""Approximate transversal constellations and exponential sum averages."""
# Standard Library
import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

# Oversampling
from oversampling.system import Settings
from oversampling.system.approx import average_bound
from oversampling.system.approx import build_constellation
from oversampling.system.approx import exp_sum_average
from oversampling.system.approx import multiscale_constellation
from oversampling.system.approx import verify_coverage
from oversampling.system.approx.constellation import exact_coset_point
from oversampling.system.conditions import DilationSpec
from oversampling.system.exactnum import matrix as mx
from oversampling.system.exceptions import DimError
from oversampling.system.exceptions import HypothesisUnverifiable
from oversampling.system.exceptions import NotSublattice
from oversampling.system.lattice import Lattice
from oversampling.system.lattice import dual
from oversampling.tests.test_utils import quotient_pairs
from oversampling.tests.test_utils import superlattices_of_integers


HALF = Fraction(1, 2)
THREE_HALVES = DilationSpec.scalar(Fraction(3, 2))


def test_exact_transversal_when_eps_is_zero():
    constellation = build_constellation([(Lattice.scaled(HALF), Lattice.integer(1))], 0)
    assert sorted(constellation.points) == [(0,), (HALF,)]


def test_trivial_quotient():
    constellation = build_constellation([(Lattice.integer(1), Lattice.integer(1))], Fraction(1, 10))
    assert constellation.points == [(0,)]


def test_not_a_quotient():
    with pytest.raises(NotSublattice):
        build_constellation([(Lattice.integer(1), Lattice.scaled(HALF))], 0)


def test_negative_tolerance():
    with pytest.raises(ValueError):
        build_constellation([(Lattice.scaled(HALF), Lattice.integer(1))], -1)


def test_incompatible_quotients_at_zero_tolerance():
    """At zero tolerance the only points of both (1/2)Z and (1/3)Z are integers, which miss the coset 1/2 + Z."""
    pairs = [(Lattice.scaled(HALF), Lattice.integer(1)), (Lattice.scaled(Fraction(1, 3)), Lattice.integer(1))]
    with pytest.raises(HypothesisUnverifiable):
        build_constellation(pairs, 0, Settings(search_radius=2))


def test_exact_coset_point():
    point = exact_coset_point(Lattice.scaled(Fraction(6, 5)), Lattice.integer(1), (Fraction(2, 5),))
    assert point == (Fraction(12, 5),)
    assert exact_coset_point(Lattice.scaled(2), Lattice.scaled(4), (1,)) is None


def test_multiscale_at_scale_zero():
    constellation = multiscale_constellation(DilationSpec.scalar(3), Lattice.scaled(HALF), 0, 0)
    assert sorted(constellation.points) == [(0,), (HALF,)]


def test_multiscale_on_integers():
    constellation = multiscale_constellation(THREE_HALVES, Lattice.integer(1), 2, Fraction(1, 100))
    assert set(constellation.points) == {(0,)}


def test_multiscale_cardinality_and_coverage():
    constellation = multiscale_constellation(THREE_HALVES, Lattice.scaled(Fraction(1, 5)), 1, Fraction(1, 100))
    assert len(constellation) == 125
    assert len(constellation.points) == 125
    reports = verify_coverage(constellation)
    assert [r.method for r in reports] == ["enumeration"] * 3
    assert all(r.ok and r.expected == 25 for r in reports)
    assert constellation.warnings == ()


def test_multiscale_warns_on_violated_condition():
    # δ = 1/2 exceeds the covering radius of every lattice involved
    constellation = multiscale_constellation(THREE_HALVES, Lattice.scaled(HALF), 1, Fraction(3, 2))
    assert constellation.warnings
    assert "violated" in constellation.warnings[0]


def test_average_on_exact_transversal():
    points = [(0,), (HALF,)]
    assert cmath.isclose(exp_sum_average(points, (2,)), 1)
    assert abs(exp_sum_average(points, (1,))) < 1e-12


def test_average_of_perturbed_points():
    assert abs(exp_sum_average([0.001, 0.502], 1)) <= average_bound((1,), 0.002)


def test_average_checks_input():
    with pytest.raises(ValueError):
        exp_sum_average([], (1,))
    with pytest.raises(DimError):
        exp_sum_average([(0, 0)], (1,))


def test_constellation_average_factorizes():
    constellation = build_constellation([(Lattice.scaled(Fraction(1, 3)), Lattice.integer(1))], 0)
    direct = exp_sum_average(constellation.points, (1,))
    assert cmath.isclose(exp_sum_average(constellation, (1,)), direct, abs_tol=1e-12)


@settings(max_examples=25, deadline=None)
@given(
    st.fractions(min_value=Fraction(1, 10 ** 4), max_value=Fraction(1, 100), max_denominator=10 ** 4),
    st.sampled_from([-1, 0, 1]),
    st.integers(-20, 20),
)
def test_multiscale_average_bound(eps, j, k):
    """The average over K is within 2π|m|ε of the indicator of m ∈ Λᵢ* for every m ∈ Γᵢ*."""
    lattice = Lattice.scaled(Fraction(1, 5))
    constellation = multiscale_constellation(THREE_HALVES, lattice, 1, eps)
    scale = Fraction(3, 2) ** -j
    m = (k * scale,)
    indicator = 1 if m in dual(lattice.transform(THREE_HALVES.power(j))) else 0
    assert abs(exp_sum_average(constellation, m) - indicator) <= average_bound(m, eps) + 1e-12


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 2).flatmap(superlattices_of_integers), st.data())
def test_single_quotient_average_bound(parent, data):
    eps = data.draw(st.fractions(min_value=0, max_value=Fraction(1, 100), max_denominator=1000))
    integers = Lattice.integer(parent.dim)
    constellation = build_constellation([(parent, integers)], eps)
    m = tuple(data.draw(st.lists(st.integers(-14, 14), min_size=parent.dim, max_size=parent.dim)))
    if math.sqrt(sum(x * x for x in m)) > 20:
        return
    indicator = 1 if m in dual(parent) else 0
    assert abs(exp_sum_average(constellation, m) - indicator) <= average_bound(m, eps) + 1e-12


@settings(max_examples=100, deadline=None)
@given(
    quotient_pairs(),
    st.fractions(min_value=Fraction(1, 10 ** 4), max_value=Fraction(1, 100), max_denominator=10 ** 4),
    st.data(),
)
def test_average_bound_on_rational_quotients(pair, eps, data):
    """For m ∈ Γ* the average over an ε-approximate transversal of Λ/Γ is within 2π|m|ε of [m ∈ Λ*]."""
    parent, sub = pair
    constellation = build_constellation([pair], eps)
    coefficients = data.draw(st.lists(st.integers(-3, 3), min_size=sub.dim, max_size=sub.dim))
    m = mx.matvec(dual(sub).basis, coefficients)
    if math.sqrt(sum(float(x) ** 2 for x in m)) > 20:
        return
    indicator = 1 if m in dual(parent) else 0
    bound = average_bound(m, eps) + 1e-12
    assert abs(exp_sum_average(constellation, m) - indicator) <= bound

    # Moving each point by less than ε keeps an ε-approximate transversal
    offsets = st.fractions(min_value=-1, max_value=1, max_denominator=100)
    moved = [tuple(x + eps / 2 * data.draw(offsets) for x in p) for p in constellation.points]
    assert abs(exp_sum_average(moved, m) - indicator) <= bound
