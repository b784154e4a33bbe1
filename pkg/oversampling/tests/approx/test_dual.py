"""Approximate duals of finite sets."""
# Standard Library
import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

# Oversampling
from oversampling.system.approx import FiniteSet
from oversampling.system.approx import agreement_threshold
from oversampling.system.approx import approx_dual_decompose
from oversampling.system.approx import approx_dual_member
from oversampling.system.exactnum import matrix as mx
from oversampling.system.exceptions import DimError
from oversampling.system.lattice import dual
from oversampling.tests.test_utils import lattices


ROOT2 = math.sqrt(2)


def test_exact_membership():
    assert approx_dual_member(FiniteSet.of(Fraction(1, 2)), 0, (2,))
    assert not approx_dual_member(FiniteSet.of(Fraction(1, 2)), Fraction(1, 4), (1,))
    assert approx_dual_member(FiniteSet.of(Fraction(1, 2)), Fraction(1, 2), (1,))


def test_float_membership():
    assert approx_dual_member(FiniteSet.of(ROOT2), 0.1, (0,))
    assert not approx_dual_member(FiniteSet.of(ROOT2), 0.01, (1,))


def test_dimension_mismatch():
    with pytest.raises(DimError):
        approx_dual_member(FiniteSet.of((1, 0)), 0, (1,))


def test_empty_set():
    with pytest.raises(ValueError):
        FiniteSet(())


def test_decompose_at_origin():
    assert approx_dual_decompose(FiniteSet.of(ROOT2), 0.05, (0.0,), 3) == (0,)


def test_decompose_irrational():
    """Some integer shift of 0.3 lands near a multiple of 1/√2."""
    z = approx_dual_decompose(FiniteSet.of(ROOT2), 0.05, (0.3,), 100)
    assert z is not None
    product = (0.3 - z[0]) * ROOT2
    assert abs(product - round(product)) <= 0.05 + 1e-12


def test_decompose_prefers_smallest_norm():
    assert approx_dual_decompose(FiniteSet.of(Fraction(1, 3)), 0, (5,), 10) == (-1,)


def test_decompose_beyond_radius():
    assert approx_dual_decompose(FiniteSet.of(Fraction(1, 3)), 0, (5,), 0) is None


@st.composite
def lattice_with_samples(draw):
    lattice = draw(lattices())
    exact_dual = dual(lattice)
    rng = draw(st.randoms(use_true_random=False))
    samples = []
    for _ in range(100):
        if rng.random() < 0.5:
            coefficients = tuple(Fraction(rng.randint(-5, 5)) for _ in range(lattice.dim))
            samples.append(mx.matvec(exact_dual.basis, coefficients))
        else:
            samples.append(tuple(Fraction(rng.randint(-72, 72), rng.randint(1, 12)) for _ in range(lattice.dim)))
    return lattice, samples


@settings(max_examples=50, deadline=None)
@given(lattice_with_samples())
def test_threshold_separates_dual(case):
    """Below the threshold approximate membership of the basis is exact dual membership."""
    lattice, samples = case
    threshold = agreement_threshold(lattice, samples)
    assert threshold is not None
    assert threshold >= 1e-6
    basis = FiniteSet.from_lattice(lattice)
    exact_dual = dual(lattice)
    for eps in (Fraction(threshold), Fraction(threshold) / 3, Fraction(1, 10 ** 6)):
        for sample in samples:
            assert approx_dual_member(basis, eps, sample) == (sample in exact_dual)
