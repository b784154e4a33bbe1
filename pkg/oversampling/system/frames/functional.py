"""The frame functional ``N(f, Γ)`` as an exact finite sum of Fourier coefficients.

For the translation lattice ``Γ = (1/λ)Z`` normalized by ``λ^(-1/2)``,

    N(f, Γ) = Σ_l Σ_j Σ_{m ∈ λZ} c_{j,l}(m),
    c_{j,l}(m) = ∫ f̂(ξ)·conj(f̂(ξ + a^j m))·conj(ψ̂_l(a^(-j)ξ))·ψ̂_l(a^(-j)ξ + m) dξ.

When ``f̂`` and every ``ψ̂_l`` are step functions supported away from zero only finitely many coefficients are nonzero.
"""
# Standard Library
import logging
import typing as t
from dataclasses import dataclass
from fractions import Fraction

# Oversampling
from oversampling.system.exactnum.quadratic import ZERO
from oversampling.system.exactnum.quadratic import ComplexQuad
from oversampling.system.exactnum.quadratic import QuadScalar
from oversampling.system.exceptions import BadIndex
from oversampling.system.exceptions import Unsupported
from oversampling.system.frames.generators import GeneratorSet
from oversampling.system.frames.stepfunction import StepFunction


logger = logging.getLogger(__name__)

#: (generator index, scale j, frequency m)
CoefficientKey = t.Tuple[int, int, Fraction]


def frame_coefficient(f: StepFunction, psi: StepFunction, a, lam: int, j: int, m) -> ComplexQuad:
    """Exact ``c_j(m)`` for one generator.

    :raises BadIndex: ``m`` is not a multiple of λ
    """
    a = Fraction(a)
    m = Fraction(m)
    if m.denominator != 1 or m.numerator % lam:
        raise BadIndex("Frequency {0} is not in {1}Z".format(m, lam))
    shift = a ** j * m
    r = a ** -j
    integrand = f * f.translate(-shift).conjugate()
    if integrand.is_zero():
        return ZERO
    integrand = integrand * psi.dilate(r).conjugate()
    if integrand.is_zero():
        return ZERO
    return (integrand * psi.translate(-m).dilate(r)).integrate()


def active_scales(f: StepFunction, psi: StepFunction, a: Fraction) -> t.List[int]:
    """Scales ``j`` for which ``f̂(ξ)·ψ̂(a^(-j)ξ)`` can be nonzero."""
    if f.is_zero() or psi.is_zero():
        return []
    if not f.away_from_zero() or not psi.away_from_zero():
        raise Unsupported("Supports must stay away from 0 for a finite scale range")
    low = f.min_abs / psi.max_abs
    high = f.max_abs / psi.min_abs
    j = 0
    while a ** j > low:
        j -= 1
    scales = []
    while a ** j < high:
        if a ** j > low:
            scales.append(j)
        j += 1
    return scales


def _frequencies(lam: int, bound: Fraction) -> t.List[int]:
    result = [0]
    k = lam
    while k <= bound:
        result.extend([k, -k])
        k += lam
    return result


def coefficient_table(f: StepFunction, psis: GeneratorSet, lam: int) -> t.Dict[CoefficientKey, ComplexQuad]:
    """All nonzero ``c_{j,l}(m)`` with ``m ∈ λZ``, keyed by ``(l, j, m)`` in index order."""
    a = psis.dilation
    table = {}
    for index, psi in enumerate(psis):
        for j in active_scales(f, psi, a):
            bound = min(2 * psi.max_abs, 2 * f.max_abs / a ** j)
            for m in _frequencies(lam, bound):
                value = frame_coefficient(f, psi, a, lam, j, m)
                if value:
                    table[(index, j, Fraction(m))] = value
    logger.debug("%d nonzero coefficients", len(table))
    return table


@dataclass(frozen=True)
class FunctionalReport:
    """Exact value of ``N(f, (1/λ)Z)`` with the coefficients it is made of."""

    value: QuadScalar
    norm2: QuadScalar
    coefficients: t.Dict[CoefficientKey, ComplexQuad]
    scales: t.Tuple[int, ...]
    lam: int

    @property
    def is_isometric(self) -> bool:
        """``N(f) = ‖f‖²``."""
        return self.value == self.norm2


def frame_functional(f: StepFunction, psis: GeneratorSet, lam: int) -> FunctionalReport:
    """``N(f, (1/λ)Z)`` summed exactly over the finite set of active coefficients.

    :raises Unsupported: a support touches 0
    """
    if lam < 1:
        raise BadIndex("Oversampling factor must be a positive integer, got {0}".format(lam))
    table = coefficient_table(f, psis, lam)
    total = ZERO
    for key in sorted(table):
        total = total + table[key]
    assert not total.im, "Coefficient pairs must sum to a real number"
    norm2 = f.abs2().integrate().re
    scales = tuple(sorted({j for _, j, _ in table}))
    return FunctionalReport(value=total.re, norm2=norm2, coefficients=table, scales=scales, lam=lam)
