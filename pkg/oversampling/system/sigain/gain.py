"""Shift-invariance gain of the space of negative dilates, read off the support of ψ̂.

For a semi-orthogonal Parseval wavelet with ``K = supp ψ̂`` the space of negative dilates is invariant under translations by a lattice ``Λ ⊃ Zⁿ`` exactly when ``|K ∩ (K + k)| = 0`` for every ``k ∈ Zⁿ \\ Λ*``. Since ``K`` is bounded only finitely many ``k`` can overlap, so every check here is exact.
"""
# Standard Library
import itertools
import logging
import math
import typing as t
from dataclasses import dataclass
from fractions import Fraction

# Oversampling
from oversampling.system.conditions import DilationSpec
from oversampling.system.conditions import Verdict
from oversampling.system.conditions import check_support_strong
from oversampling.system.exceptions import BadDilation
from oversampling.system.exceptions import DimError
from oversampling.system.exceptions import NotSublattice
from oversampling.system.exceptions import Unsupported
from oversampling.system.frames import GeneratorSet
from oversampling.system.frames import check_parseval
from oversampling.system.lattice import Lattice
from oversampling.system.lattice import dual
from oversampling.system.lattice import is_sublattice
from oversampling.system.sigain.regions import RegionSet
from oversampling.system.sigain.regions import overlap_measure


logger = logging.getLogger(__name__)

#: Class of a region whose nonzero integer translates all miss it
INFINITE_CLASS = math.inf

BeheraClass = t.Union[int, float]


def _shift_key(k: t.Tuple[int, ...]) -> t.Tuple:
    return max(abs(c) for c in k), tuple(-c for c in k)


def candidate_shifts(region: RegionSet) -> t.List[t.Tuple[int, ...]]:
    """Nonzero integer shifts with ``|kᵢ| < extentᵢ``, smallest first; all others miss the region."""
    ranges = []
    for e in region.extent:
        reach = math.ceil(e) - 1
        ranges.append(range(-reach, reach + 1))
    shifts = [k for k in itertools.product(*ranges) if any(k)]
    return sorted(shifts, key=_shift_key)


def overlapping_shifts(region: RegionSet) -> t.List[t.Tuple[t.Tuple[int, ...], Fraction]]:
    """Nonzero integer ``k`` with ``|K ∩ (K + k)| > 0`` and the overlap measure, in scan order."""
    result = []
    for k in candidate_shifts(region):
        measure = overlap_measure(region, k)
        if measure:
            result.append((k, measure))
    return result


def si_gain_check(region: RegionSet, lattice: Lattice) -> Verdict:
    """Whether the support ``K`` allows invariance under translations by ``Λ``.

    The witness is the first ``k ∈ Zⁿ \\ Λ*`` in order of ``max |kᵢ|`` whose translate overlaps ``K``, with the measure of the overlap.

    :raises NotSublattice: ``Zⁿ ⊄ Λ``
    """
    if lattice.dim != region.dim:
        raise DimError("Lattice of dimension {0} for a region in dimension {1}".format(lattice.dim, region.dim))
    if not is_sublattice(Lattice.integer(region.dim), lattice):
        raise NotSublattice("Translation lattice must contain Zⁿ, got {0!r}".format(lattice))
    frequencies = dual(lattice)
    for k in candidate_shifts(region):
        if k in frequencies:
            continue
        measure = overlap_measure(region, k)
        if measure:
            logger.debug("Shift %s overlaps by %s", k, measure)
            return Verdict.violated(k=list(k), measure=measure)
    return Verdict.holds()


def _require_integer(dilation: DilationSpec):
    if not dilation.is_integer:
        raise Unsupported("Classes are defined for integer dilations only, got {0!r}".format(dilation))
    dilation.require_expansive()


def behera_class(region: RegionSet, dilation: DilationSpec, r_max: int) -> BeheraClass:
    """Largest ``r <= r_max`` such that every overlapping shift lies in ``BʳZⁿ``.

    :py:data:`INFINITE_CLASS` when no nonzero integer shift overlaps, which is the MSF case.

    :raises Unsupported: non-integer dilation
    """
    _require_integer(dilation)
    if dilation.n != region.dim:
        raise DimError("Dilation of size {0} for a region in dimension {1}".format(dilation.n, region.dim))
    if r_max < 0:
        raise ValueError("r_max must be non-negative, got {0}".format(r_max))
    overlaps = overlapping_shifts(region)
    if not overlaps:
        return INFINITE_CLASS
    r = 0
    while r < r_max:
        nested = Lattice(dilation.power_transpose(r + 1))
        if any(k not in nested for k, _ in overlaps):
            break
        r += 1
    logger.debug("%d overlapping shifts, class %d", len(overlaps), r)
    return r


def support_condition(region: RegionSet, dilation: DilationSpec, j0: int) -> Verdict:
    """``ψ̂(ξ)·ψ̂(ξ + k) = 0`` for almost every ξ and every ``k ∈ Zⁿ \\ B^J₀ Zⁿ``.

    This is the overlap test against ``Λ = A^(-J₀)Zⁿ``.
    """
    _require_integer(dilation)
    if j0 < 0:
        raise ValueError("J0 must be non-negative, got {0}".format(j0))
    return si_gain_check(region, Lattice(dilation.power(-j0)))


def oversample_with_support(region: RegionSet, dilation: DilationSpec, lattice: Lattice, j0: int, j_max: int) -> Verdict:
    """Decide whether frame bounds carry over from ``Zⁿ`` to ``A^(-J₀)Λ``.

    Both the shifted strong lattice condition and the support condition must hold. A violated verdict names the failing one under ``condition``.
    """
    support = support_condition(region, dilation, j0)
    if support.is_violated:
        return Verdict.violated(condition="support", **support.witness)
    strong = check_support_strong(dilation, lattice, j0, j_max)
    if strong.is_violated:
        return Verdict.violated(condition="lattice", **strong.witness)
    note = "Oversampled lattice {0!r}".format(lattice.transform(dilation.power(-j0)))
    return Verdict(strong.status, certificate=strong.certificate, bound=strong.bound, notes=strong.notes + (note,))


@dataclass(frozen=True)
class CrosscheckRow:
    s: int
    parseval: Verdict
    class_allows: bool

    @property
    def agrees(self) -> bool:
        return self.parseval.is_holding == self.class_allows


@dataclass(frozen=True)
class CrosscheckReport:
    """Oversampled Parseval checks at ``λ = aˢ`` against the class read off the support."""

    behera_class: BeheraClass
    rows: t.Tuple[CrosscheckRow, ...]
    r: int
    semi_orthogonal: bool = True

    @property
    def agrees(self) -> bool:
        """Parseval at every ``s <= r`` exactly when the class is at least ``r``, and the same per row."""
        all_parseval = all(row.parseval.is_holding for row in self.rows)
        return all(row.agrees for row in self.rows) and all_parseval == (self.behera_class >= self.r)


def oversample_crosscheck(psi: GeneratorSet, a: int, r: int, semi_orthogonal: bool = True) -> CrosscheckReport:
    """Run ``check_parseval(ψ, aˢ)`` for ``s = 1…r`` and compare with ``behera_class(supp ψ̂, a) >= s``.

    Semi-orthogonality cannot be verified from the step data and is taken as declared.

    :raises BadDilation: ``a`` is not the integer dilation of ``ψ``
    :raises Unsupported: ``ψ`` is not Parseval at ``λ = 1`` or not declared semi-orthogonal
    """
    a = Fraction(a)
    if a != psi.dilation or a.denominator != 1 or a < 2:
        raise BadDilation("Cross-check needs the integer dilation of the generator, got {0} for {1}".format(a, psi.dilation))
    if not semi_orthogonal:
        raise Unsupported("The class criterion applies to semi-orthogonal wavelets only")
    if len(psi) != 1:
        raise Unsupported("Cross-check takes a single generator, got {0}".format(len(psi)))
    if r < 0:
        raise ValueError("r must be non-negative, got {0}".format(r))
    base = check_parseval(psi, 1)
    if not base.is_holding:
        raise Unsupported("Generator is not a Parseval wavelet: {0}".format(base.witness))

    region = RegionSet.from_generators(psi)
    found = behera_class(region, DilationSpec.scalar(a), r)
    rows = []
    for s in range(1, r + 1):
        verdict = check_parseval(psi, int(a) ** s)
        row = CrosscheckRow(s=s, parseval=verdict, class_allows=found >= s)
        if not row.agrees:
            logger.warning("Class %s disagrees with the Parseval check at s=%d: %s", found, s, verdict.status.value)
        rows.append(row)
    return CrosscheckReport(behera_class=found, rows=tuple(rows), r=r, semi_orthogonal=semi_orthogonal)
