"""Characterizing equations of dual and Parseval affine frames for rational dilations.

Two generator sets Ψ, Φ with dilation ``a`` and translation lattice ``(1/λ)Z`` give dual frames exactly when, for almost every ξ,

    t_α(ξ) = Σ_l Σ_{j : a^(-j)α ∈ λZ} ψ̂_l(a^(-j)ξ)·conj(φ̂_l(a^(-j)(ξ + α))) = δ_{α,0}

for every α. With supports compact and away from zero every sum is finite and the α that can contribute are bounded, so the verdicts here are exact.
"""
# Standard Library
import logging
import math
import typing as t
from fractions import Fraction

# Oversampling
from oversampling.system.conditions import Verdict
from oversampling.system.exactnum.quadratic import ONE
from oversampling.system.exactnum.quadratic import ZERO
from oversampling.system.exactnum.quadratic import QuadScalar
from oversampling.system.exceptions import BadIndex
from oversampling.system.exceptions import Unsupported
from oversampling.system.frames.generators import GeneratorSet
from oversampling.system.frames.stepfunction import StepFunction


logger = logging.getLogger(__name__)


def _require_pair(psi: GeneratorSet, phi: GeneratorSet):
    if psi.dilation != phi.dilation:
        raise ValueError("Generator sets use different dilations: {0} and {1}".format(psi.dilation, phi.dilation))
    if len(psi) != len(phi):
        raise ValueError("Generator sets of different sizes: {0} and {1}".format(len(psi), len(phi)))
    for gs in (psi, phi):
        for g in gs:
            if not g.away_from_zero():
                raise Unsupported("Support touching 0 cannot be truncated exactly: {0}".format(g.support()))


def _require_lambda(lam: int):
    if not isinstance(lam, int) or lam < 1:
        raise BadIndex("Oversampling factor must be a positive integer, got {0!r}".format(lam))


def _scale_range(a: Fraction, lo: Fraction, hi: Fraction) -> range:
    """Integers ``k`` with ``[a^k, a^(k+1))`` meeting ``[lo, hi]``, for ``0 < lo <= hi``."""
    first = 0
    while a ** (first + 1) <= lo:
        first += 1
    while a ** first > lo:
        first -= 1
    last = first
    while a ** (last + 1) < hi:
        last += 1
    return range(first, last + 1)


def diagonal_sum(psi: GeneratorSet, phi: t.Optional[GeneratorSet] = None) -> StepFunction:
    """``t₀`` on ``[-a, -1) ∪ [1, a)``, marked multiplicatively periodic with period ``a``."""
    phi = psi if phi is None else phi
    _require_pair(psi, phi)
    a = psi.dilation
    product = StepFunction.zero(psi.radicand)
    for g, h in zip(psi, phi):
        product = product + g * h.conjugate()
    if product.is_zero():
        return product.with_period(a)
    lo, hi = product.min_abs, product.max_abs
    domain = StepFunction.indicator(-a, -1, 1, psi.radicand) + StepFunction.indicator(1, a, 1, psi.radicand)
    total = StepFunction.zero(psi.radicand)
    for k in _scale_range(a, lo, hi):
        # ξ ↦ product(a^k ξ), which is the j = -k term
        total = total + product.dilate(a ** k)
    return (total * domain).with_period(a)


def _term_scales(a: Fraction, alpha: int, lam: int, reach: Fraction) -> t.List[int]:
    """Scales ``j`` with ``a^(-j)α ∈ λZ`` whose term can be nonzero."""
    scales = []
    j = 0
    while True:
        shifted = alpha / a ** j
        if shifted.denominator != 1:
            break
        if shifted.numerator % lam == 0:
            scales.append(j)
        j += 1
    j = -1
    while a ** (-j) * abs(alpha) <= reach:
        shifted = alpha / a ** j
        if shifted.denominator == 1 and shifted.numerator % lam == 0:
            scales.append(j)
        j -= 1
    return sorted(scales)


def t_alpha(psi: GeneratorSet, phi: GeneratorSet, lam: int, alpha: int) -> StepFunction:
    """The function ``t_α`` for translation lattice ``(1/λ)Z``.

    For ``α = 0`` one period is returned, see :py:func:`diagonal_sum`.

    :raises Unsupported: a support touches 0
    """
    _require_pair(psi, phi)
    _require_lambda(lam)
    if alpha == 0:
        return diagonal_sum(psi, phi)
    a = psi.dilation
    reach = psi.max_abs + phi.max_abs
    result = StepFunction.zero(psi.radicand)
    for j in _term_scales(a, Fraction(alpha), lam, reach):
        r = a ** -j
        for g, h in zip(psi, phi):
            shifted = h.translate(-alpha * r).dilate(r)
            result = result + g.dilate(r) * shifted.conjugate()
    return result


def alpha_range(psi: GeneratorSet, phi: GeneratorSet, lam: int) -> t.List[int]:
    """Nonzero α ∈ λZ that can carry a nonzero ``t_α``, ordered λ, -λ, 2λ, -2λ, …

    Any other α is a dilate of one of these and its ``t_α`` a dilate of theirs.
    """
    bound = math.ceil(psi.max_abs + phi.max_abs)
    result = []
    for k in range(1, bound // lam + 1):
        result.extend([k * lam, -k * lam])
    return result


def _interval(lo: Fraction, hi: Fraction) -> t.List[str]:
    return [str(lo), str(hi)]


def check_dual(psi: GeneratorSet, phi: GeneratorSet, lam: int) -> Verdict:
    """Decide whether the two affine systems oversampled to ``(1/λ)Z`` are dual frames.

    The witness names the first α whose ``t_α`` differs from ``δ_{α,0}``, the offending interval and the value there.
    """
    _require_pair(psi, phi)
    _require_lambda(lam)
    diagonal = diagonal_sum(psi, phi)
    deviation = diagonal.first_deviation(ONE)
    if deviation is not None:
        lo, hi, value = deviation
        logger.debug("Diagonal sum is %s on [%s, %s)", value, lo, hi)
        return Verdict.violated(alpha=0, interval=_interval(lo, hi), value=value)
    for alpha in alpha_range(psi, phi, lam):
        deviation = t_alpha(psi, phi, lam, alpha).first_deviation(ZERO)
        if deviation is not None:
            lo, hi, value = deviation
            logger.debug("t_%d is %s on [%s, %s)", alpha, value, lo, hi)
            return Verdict.violated(alpha=alpha, interval=_interval(lo, hi), value=value)
    return Verdict.holds()


def bessel_bound(psi: GeneratorSet) -> QuadScalar:
    """Supremum of ``Σ_j |ψ̂(a^(-j)ξ)|²`` summed over the generators."""
    return _sup_real(diagonal_sum(psi))


def _sup_real(periodic: StepFunction) -> QuadScalar:
    best = QuadScalar(0, 0, periodic.radicand)
    for _, _, value in periodic.intervals():
        best = max(best, value.re)
    return best


def check_parseval(psi: GeneratorSet, lam: int) -> Verdict:
    """Whether the affine system oversampled to ``(1/λ)Z`` and normalized by ``λ^(-1/2)`` is a Parseval frame.

    The Bessel bound is computed first and reported in the notes.
    """
    bound = bessel_bound(psi)
    verdict = check_dual(psi, psi, lam)
    note = "Bessel bound {0}".format(bound)
    return Verdict(verdict.status, verdict.witness, verdict.certificate, verdict.bound, verdict.notes + (note,))


def check_parseval_specialized(psi: GeneratorSet, lam: int) -> Verdict:
    """Parseval check through the reduced equation set for ``a = p/q`` with ``q >= 2``.

    Besides the diagonal sum being 1, it asks for every ``s >= 0`` and every ``t`` outside ``qZ ∪ pZ``

        Σ_{j=0..s} ψ̂(a^j ξ)·conj(ψ̂(a^j (ξ + q^s λ t))) = 0.

    Only finitely many ``(s, t)`` can overlap. The generalization beyond ``a = 3/2`` is unproven, which is why it is kept as a cross-check of :py:func:`check_parseval`.

    :raises Unsupported: integer dilation
    """
    _require_pair(psi, psi)
    _require_lambda(lam)
    p, q = psi.p, psi.q
    if q < 2:
        raise Unsupported("Reduced equations need a non-integer dilation, got {0}".format(psi.dilation))
    deviation = diagonal_sum(psi).first_deviation(ONE)
    if deviation is not None:
        lo, hi, value = deviation
        return Verdict.violated(s=None, t=0, interval=_interval(lo, hi), value=value)

    a = psi.dilation
    reach = 2 * psi.max_abs
    s = 0
    while q ** s * lam <= reach:
        offset_unit = q ** s * lam
        for k in range(1, int(reach // offset_unit) + 1):
            for t_value in (k, -k):
                if t_value % q == 0 or t_value % p == 0:
                    continue
                offset = offset_unit * t_value
                total = StepFunction.zero(psi.radicand)
                for j in range(0, s + 1):
                    scale = a ** j
                    for g in psi:
                        total = total + g.dilate(scale) * g.dilate(scale).translate(-offset).conjugate()
                found = total.first_deviation(ZERO)
                if found is not None:
                    lo, hi, value = found
                    return Verdict.violated(s=s, t=t_value, interval=_interval(lo, hi), value=value)
        s += 1
    return Verdict.holds()
