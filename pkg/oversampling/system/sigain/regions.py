"""Finite unions of half-open rational boxes."""
# Standard Library
import logging
import math
import typing as t
from fractions import Fraction

# Oversampling
from oversampling.system.exactnum.rational import Vector
from oversampling.system.exactnum.rational import as_vector
from oversampling.system.exceptions import DimError
from oversampling.system.exceptions import InputError
from oversampling.system.frames.generators import GeneratorSet
from oversampling.system.frames.stepfunction import StepFunction


logger = logging.getLogger(__name__)

Box = t.Tuple[Vector, Vector]


def _volume(box: Box) -> Fraction:
    lo, hi = box
    return math.prod((h - l for l, h in zip(lo, hi)), start=Fraction(1))


def _meet(first: Box, second: Box) -> t.Optional[Box]:
    lo = tuple(max(a, b) for a, b in zip(first[0], second[0]))
    hi = tuple(min(a, b) for a, b in zip(first[1], second[1]))
    if any(l >= h for l, h in zip(lo, hi)):
        return None
    return lo, hi


def _merge(first: Box, second: Box) -> t.Optional[Box]:
    """Union of two boxes when it is itself a box sharing a face."""
    axis = None
    for i, (a_lo, a_hi, b_lo, b_hi) in enumerate(zip(first[0], first[1], second[0], second[1])):
        if (a_lo, a_hi) == (b_lo, b_hi):
            continue
        if axis is not None or (a_hi != b_lo and b_hi != a_lo):
            return None
        axis = i
    if axis is None:
        return first
    lo = list(first[0])
    hi = list(first[1])
    lo[axis] = min(first[0][axis], second[0][axis])
    hi[axis] = max(first[1][axis], second[1][axis])
    return tuple(lo), tuple(hi)


class RegionSet:
    """Pairwise disjoint axis-aligned boxes ``[lo₁, hi₁) × … × [loₙ, hiₙ)`` with rational corners.

    Boxes are kept sorted with face-sharing neighbours merged. Empty boxes are dropped.

    :raises InputError: overlapping boxes or a box of the wrong dimension
    """

    def __init__(self, dim: int, boxes: t.Iterable[t.Tuple[t.Sequence, t.Sequence]] = ()):
        if dim < 1:
            raise DimError("Region dimension must be positive, got {0}".format(dim))
        self.dim = dim
        parsed = []
        for index, (lo, hi) in enumerate(boxes):
            lo, hi = as_vector(lo), as_vector(hi)
            if len(lo) != dim or len(hi) != dim:
                raise InputError("Box corners must have {0} coordinates".format(dim), "$.boxes[{0}]".format(index))
            if all(l < h for l, h in zip(lo, hi)):
                parsed.append((lo, hi))
        for i, first in enumerate(parsed):
            for j in range(i + 1, len(parsed)):
                if _meet(first, parsed[j]) is not None:
                    raise InputError("Boxes {0} and {1} overlap".format(i, j), "$.boxes")
        self.boxes = self._canonical(parsed)

    @staticmethod
    def _canonical(boxes: t.List[Box]) -> t.Tuple[Box, ...]:
        boxes = sorted(boxes)
        merged = True
        while merged:
            merged = False
            for i in range(len(boxes)):
                for j in range(i + 1, len(boxes)):
                    union = _merge(boxes[i], boxes[j])
                    if union is not None:
                        boxes[i] = union
                        del boxes[j]
                        merged = True
                        break
                if merged:
                    break
        return tuple(sorted(boxes))

    @classmethod
    def intervals(cls, intervals: t.Iterable[t.Tuple[t.Any, t.Any]]) -> "RegionSet":
        """A one dimensional region from ``(lo, hi)`` pairs."""
        return cls(1, [((lo,), (hi,)) for lo, hi in intervals])

    @classmethod
    def from_step_support(cls, f: StepFunction) -> "RegionSet":
        return cls.intervals(f.support())

    @classmethod
    def from_generators(cls, psis: GeneratorSet) -> "RegionSet":
        """Union of the supports of all generators."""
        pieces = []
        for psi in psis:
            pieces.extend(psi.support())
        # Supports of different generators may overlap; fold them into one step function first
        union = StepFunction.zero(psis.radicand)
        for lo, hi in pieces:
            union = union + StepFunction.indicator(lo, hi, 1, psis.radicand)
        return cls.intervals(union.support())

    @property
    def measure(self) -> Fraction:
        return sum((_volume(box) for box in self.boxes), Fraction(0))

    def is_empty(self) -> bool:
        return not self.boxes

    def _require_dim(self, k: t.Sequence):
        if len(k) != self.dim:
            raise DimError("Shift of length {0} for a region in dimension {1}".format(len(k), self.dim))

    def translate(self, k: t.Sequence) -> "RegionSet":
        """The region ``K + k``."""
        self._require_dim(k)
        k = as_vector(k)
        shifted = []
        for lo, hi in self.boxes:
            shifted.append((tuple(a + b for a, b in zip(lo, k)), tuple(a + b for a, b in zip(hi, k))))
        return RegionSet(self.dim, shifted)

    def intersection_measure(self, other: "RegionSet") -> Fraction:
        if other.dim != self.dim:
            raise DimError("Regions of dimension {0} and {1}".format(self.dim, other.dim))
        total = Fraction(0)
        for first in self.boxes:
            for second in other.boxes:
                common = _meet(first, second)
                if common is not None:
                    total += _volume(common)
        return total

    @property
    def extent(self) -> Vector:
        """Coordinate-wise diameter; any shift with ``|kᵢ| >= extentᵢ`` for some ``i`` misses the region."""
        if self.is_empty():
            return tuple(Fraction(0) for _ in range(self.dim))
        return tuple(
            max(hi[i] for _, hi in self.boxes) - min(lo[i] for lo, _ in self.boxes)
            for i in range(self.dim))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RegionSet):
            return NotImplemented
        return self.dim == other.dim and self.boxes == other.boxes

    def __hash__(self):
        return hash((self.dim, self.boxes))

    def __repr__(self) -> str:
        parts = []
        for lo, hi in self.boxes:
            parts.append("[{0}, {1})".format(", ".join(map(str, lo)), ", ".join(map(str, hi))))
        return "RegionSet({0}, {1})".format(self.dim, " ∪ ".join(parts) or "∅")


def overlap_measure(region: RegionSet, k: t.Sequence) -> Fraction:
    """Exact measure of ``K ∩ (K + k)``."""
    return region.intersection_measure(region.translate(k))


def box_pair() -> RegionSet:
    """``[0, 1) ∪ [2, 3)``, the support of a dyadic MSF wavelet of class one."""
    return RegionSet.intervals([(0, 1), (2, 3)])


def shannon_support() -> RegionSet:
    return RegionSet.intervals([(-1, Fraction(-1, 2)), (Fraction(1, 2), 1)])


REGIONS: t.Dict[str, t.Callable[[], RegionSet]] = {
    "box-pair": box_pair,
    "shannon": shannon_support,
}
