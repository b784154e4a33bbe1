"""Approximate transversal constellations.

A constellation for a family of quotients ``Λᵢ/Γᵢ`` is the algebraic sum ``K = D¹ + … + Dᴶ`` of one δ-approximate transversal per quotient, each picked inside the set of points that are δ-close to *every* ``Λₖ``. Every point of ``K`` is then within ``ε = Jδ`` of each ``Λᵢ`` and, for each ``i``, the cosets of ``Γᵢ`` it lands in are equidistributed. This is what makes exponential sums over ``K`` vanish on ``Γᵢ* ∖ Λᵢ*`` up to ``O(ε)``.

Everything here is exact: lattices are rational, candidates are rational points and δ is compared as a :py:class:`fractions.Fraction`.
"""
# Standard Library
import collections
import itertools
import logging
import math
import typing as t
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction

import numpy as np

# Oversampling
from oversampling.system import DEFAULT_SETTINGS
from oversampling.system import Settings
from oversampling.system.conditions import DilationSpec
from oversampling.system.conditions import Status
from oversampling.system.conditions import check_strong
from oversampling.system.exactnum import matrix as mx
from oversampling.system.exactnum.normalforms import hnf
from oversampling.system.exactnum.rational import Vector
from oversampling.system.exactnum.rational import round_half_up
from oversampling.system.exceptions import DimError
from oversampling.system.exceptions import HypothesisUnverifiable
from oversampling.system.exceptions import NotSublattice
from oversampling.system.lattice import Lattice
from oversampling.system.lattice import exact_transversal
from oversampling.system.lattice import intersect
from oversampling.system.lattice import is_sublattice
from oversampling.system.lattice import smith_basis
from oversampling.system.lattice.operations import reduce_modulo


logger = logging.getLogger(__name__)

Pair = t.Tuple[Lattice, Lattice]


def _norm2(v: t.Sequence[Fraction]) -> Fraction:
    return sum((x * x for x in v), Fraction(0))


def _add(*vectors: t.Sequence[Fraction]) -> Vector:
    return tuple(sum(column, Fraction(0)) for column in zip(*vectors))


def _sub(v: t.Sequence[Fraction], w: t.Sequence[Fraction]) -> Vector:
    return tuple(Fraction(x) - y for x, y in zip(v, w))


def nearest_point(lattice: Lattice, x: t.Sequence[Fraction]) -> Vector:
    """Closest lattice point found among the roundings of the coordinates of ``x`` and their neighbours."""
    base = tuple(round_half_up(c) for c in lattice.coordinates(x))
    best = None
    for offset in itertools.product((-1, 0, 1), repeat=lattice.dim):
        coords = tuple(b + o for b, o in zip(base, offset))
        point = mx.matvec(lattice.basis, coords)
        key = (_norm2(_sub(x, point)), coords)
        if best is None or key < best[0]:
            best = (key, point)
    return best[1]


def distance2(lattice: Lattice, x: t.Sequence[Fraction]) -> Fraction:
    """Squared distance from ``x`` to :py:func:`nearest_point`."""
    return _norm2(_sub(x, nearest_point(lattice, x)))


@dataclass(frozen=True)
class CoverageReport:
    """Coset occupation of a constellation for one quotient ``Λᵢ/Γᵢ``."""

    pair: int
    method: str
    expected: int
    smallest: int
    largest: int
    max_deviation: float

    @property
    def ok(self) -> bool:
        return self.smallest == self.largest == self.expected


@dataclass(frozen=True)
class Constellation:
    """Sum of approximate transversals, one factor per served quotient.

    The points of ``K`` are all sums picking one point from each factor, so ``|K|`` is the product of the quotient orders. Coordinates are kept exact; :py:meth:`as_array` gives the float view.
    """

    factors: t.Tuple[t.Tuple[Vector, ...], ...]
    epsilon: Fraction
    pairs: t.Tuple[Pair, ...]
    warnings: t.Tuple[str, ...] = field(default_factory=tuple)

    @property
    def dim(self) -> int:
        return self.pairs[0][0].dim

    def __len__(self) -> int:
        return math.prod(len(f) for f in self.factors)

    @property
    def points(self) -> t.List[Vector]:
        """All points of ``K``, with multiplicity."""
        return [_add(*choice) for choice in itertools.product(*self.factors)]

    def as_array(self) -> np.ndarray:
        return np.array([[float(x) for x in p] for p in self.points], dtype=float).reshape(-1, self.dim)

    def with_warning(self, message: str) -> "Constellation":
        return Constellation(self.factors, self.epsilon, self.pairs, self.warnings + (message,))


def _validate_pairs(pairs: t.Sequence[Pair]):
    if not pairs:
        raise ValueError("A constellation serves at least one quotient")
    dims = {lattice.dim for pair in pairs for lattice in pair}
    if len(dims) != 1:
        raise DimError("Quotients of different dimensions: {0}".format(sorted(dims)))
    for parent, sub in pairs:
        if not is_sublattice(sub, parent):
            raise NotSublattice("{0!r} is not inside {1!r}".format(sub, parent))


def _common_intersection(lattices: t.Sequence[Lattice]) -> Lattice:
    result = lattices[0]
    for lattice in lattices[1:]:
        result = intersect(result, lattice)
    return result


def _forward_substitute(h: mx.IntMatrix, rhs: t.Sequence[int]) -> t.Optional[t.Tuple[int, ...]]:
    """Integer solution of ``H·w = rhs`` for lower triangular ``H``, if any."""
    w = []
    for i, row in enumerate(h):
        rest = rhs[i] - sum(row[k] * w[k] for k in range(i))
        if rest % row[i]:
            return None
        w.append(rest // row[i])
    return tuple(w)


def exact_coset_point(delta0: Lattice, sub: Lattice, c: t.Sequence[Fraction]) -> t.Optional[Vector]:
    """A point of ``Δ₀ ∩ (c + Γ)`` near the origin, or ``None`` when the intersection is empty.

    Solves ``Δ₀·u - c ∈ Γ`` from the Hermite form of ``[D·Δ₀ | D·Γ]``.
    """
    n = delta0.dim
    stacked, denominator = mx.clear_denominators(mx.hstack(delta0.basis, sub.basis))
    rhs = tuple(Fraction(x) * denominator for x in c)
    if any(v.denominator != 1 for v in rhs):
        return None
    h, u = hnf(stacked)
    w = _forward_substitute(h, tuple(int(v) for v in rhs))
    if w is None:
        return None
    full = mx.matvec(u, w + (0,) * n)
    point = mx.matvec(delta0.basis, full[:n])
    return reduce_modulo(intersect(delta0, sub), point)


def _close_to_all(x: Vector, lattices: t.Sequence[Lattice], delta2: Fraction) -> bool:
    return all(distance2(lattice, x) <= delta2 for lattice in lattices)


def _approximate_transversal(pair: Pair, index: int, lattices: t.Sequence[Lattice], delta0: Lattice, delta: Fraction,
                             settings: Settings) -> t.Tuple[Vector, ...]:
    parent, sub = pair
    delta2 = delta * delta
    radius = settings.search_radius
    n = parent.dim
    grid = list(itertools.product(range(-radius, radius + 1), repeat=n))
    shell = list(itertools.product((-1, 0, 1), repeat=n))
    refined = intersect(delta0, sub)
    chosen = []
    for rep in exact_transversal(parent, sub):
        candidates = [_add(rep, mx.matvec(sub.basis, z)) for z in grid]
        anchor = exact_coset_point(delta0, sub, rep)
        if anchor is not None:
            candidates.extend(_add(anchor, mx.matvec(refined.basis, z)) for z in shell)
        valid = [x for x in candidates if _close_to_all(x, lattices, delta2)]
        if not valid:
            raise HypothesisUnverifiable(
                "No point of coset {rep} of quotient {index} is within {delta} of every lattice "
                "(search radius {radius})".format(rep=tuple(str(x) for x in rep), index=index, delta=delta, radius=radius))
        chosen.append(min(valid, key=lambda x: (_norm2(x), _norm2(_sub(x, rep)), x)))
    return tuple(chosen)


def build_constellation(pairs: t.Sequence[Pair], eps, settings: Settings = DEFAULT_SETTINGS) -> Constellation:
    """Constellation serving every quotient ``Λᵢ/Γᵢ`` within ``eps``.

    Each factor uses tolerance ``δ = eps/J`` for ``J`` quotients. For every coset representative the candidates are the translates by Γᵢ inside the search cube and the exact points of ``Δ₀ = ∩Λₖ`` in that coset; the one of smallest norm that lies within δ of every ``Λₖ`` is kept. Ties go to the candidate nearest the exact representative, then lexicographically.

    :param pairs: Quotients as ``(Λᵢ, Γᵢ)`` with ``Γᵢ ⊂ Λᵢ``
    :param eps: Non-negative tolerance; floats are converted exactly
    :raises HypothesisUnverifiable: some coset has no admissible point within the search budget
    """
    _validate_pairs(pairs)
    eps = Fraction(eps)
    if eps < 0:
        raise ValueError("Tolerance must be non-negative")
    lattices = [parent for parent, _ in pairs]
    delta = eps / len(pairs)
    delta0 = _common_intersection(lattices)
    factors = tuple(
        _approximate_transversal(pair, index, lattices, delta0, delta, settings) for index, pair in enumerate(pairs))
    constellation = Constellation(factors=factors, epsilon=eps, pairs=tuple(pairs))
    logger.info("Built constellation of %d points for %d quotients at eps=%s", len(constellation), len(pairs), eps)
    if settings.verify_coverage:
        failed = [r for r in verify_coverage(constellation, settings) if not r.ok]
        if failed:
            raise HypothesisUnverifiable("Coverage fails for quotients {0}".format([r.pair for r in failed]))
    return constellation


def _histogram(points: t.Iterable[Vector], pair: Pair, eps2: Fraction) -> t.Optional[collections.Counter]:
    basis = smith_basis(*pair)
    counts = collections.Counter()
    for point in points:
        near = nearest_point(pair[0], point)
        if _norm2(_sub(point, near)) > eps2:
            return None
        counts[basis.coset_of(near)] += 1
    return counts


def _convolve(first: collections.Counter, second: collections.Counter, divisors: t.Sequence[int]) -> collections.Counter:
    result = collections.Counter()
    for a, x in first.items():
        for b, y in second.items():
            result[tuple((i + j) % d for i, j, d in zip(a, b, divisors))] += x * y
    return result


def _report(index: int, method: str, counts: t.Optional[collections.Counter], total: int, order: int,
            deviation: float) -> CoverageReport:
    expected = total // order
    if counts is None:
        return CoverageReport(index, method, expected, 0, 0, deviation)
    occupied = [counts.get(c, 0) for c in counts] + ([0] if len(counts) < order else [])
    return CoverageReport(index, method, expected, min(occupied), max(occupied), deviation)


def verify_coverage(constellation: Constellation, settings: Settings = DEFAULT_SETTINGS) -> t.List[CoverageReport]:
    """Count, for every quotient, how many points of ``K`` fall near each coset.

    Uses the per-factor coset histograms convolved over the quotient group. Small constellations are additionally counted point by point, and that count is the one reported.
    """
    reports = []
    eps = constellation.epsilon
    for index, pair in enumerate(constellation.pairs):
        basis = smith_basis(*pair)
        total = len(constellation)
        slack2 = (eps / len(constellation.pairs)) ** 2
        histograms = [_histogram(f, pair, slack2) for f in constellation.factors]
        if any(h is None for h in histograms):
            reports.append(_report(index, "convolution", None, total, basis.order, float("inf")))
            continue
        combined = collections.Counter({(0,) * len(basis.divisors): 1})
        for h in histograms:
            combined = _convolve(combined, h, basis.divisors)
        report = _report(index, "convolution", combined, total, basis.order, float(eps))

        if total <= settings.enumerate_limit:
            counts = collections.Counter()
            worst = Fraction(0)
            for choice in itertools.product(*constellation.factors):
                point = _add(*choice)
                near = _add(*(nearest_point(pair[0], x) for x in choice))
                worst = max(worst, _norm2(_sub(point, near)))
                counts[basis.coset_of(near)] += 1
            report = _report(index, "enumeration", counts if worst <= eps * eps else None, total, basis.order,
                             math.sqrt(worst))
        reports.append(report)
    return reports


def multiscale_constellation(dilation: DilationSpec, lattice: Lattice, j: int, eps,
                             settings: Settings = DEFAULT_SETTINGS) -> Constellation:
    """Constellation for the quotients ``AʲΛ/AʲZⁿ`` with ``|j| <= J``.

    The strong condition is checked first in bounded mode; the result carries a warning when it only holds up to the bound.
    """
    if j < 0:
        raise ValueError("Scale range must be non-negative")
    dilation.require_expansive()
    integers = Lattice.integer(lattice.dim)
    pairs = [(lattice.transform(dilation.power(k)), integers.transform(dilation.power(k))) for k in range(-j, j + 1)]
    verdict = check_strong(dilation, lattice, max(2 * j, 1))
    constellation = build_constellation(pairs, eps, settings)
    if verdict.status is Status.HOLDS_UP_TO:
        constellation = constellation.with_warning("Strong condition only verified up to J={0}".format(verdict.bound))
    elif verdict.is_violated:
        constellation = constellation.with_warning("Strong condition is violated: {0}".format(verdict.witness))
    return constellation


def _phase_average(points: t.Sequence[t.Sequence], m: t.Sequence) -> complex:
    exact = all(isinstance(x, (int, Fraction)) for p in points for x in p) and \
        all(isinstance(x, (int, Fraction)) for x in m)
    if exact:
        # Reduce the exact inner products mod 1 before going to floats
        phases = np.array([float(sum((Fraction(a) * b for a, b in zip(m, p)), Fraction(0)) % 1) for p in points])
    else:
        phases = np.asarray(points, dtype=float).reshape(len(points), -1) @ np.asarray(m, dtype=float)
    return complex(np.mean(np.exp(2j * np.pi * phases)))


def exp_sum_average(points: t.Union[Constellation, t.Sequence[t.Sequence]], m: t.Sequence) -> complex:
    """Average of ``exp(2πi⟨m, d⟩)`` over a constellation or a list of points.

    For a constellation the average factorizes over its factors.
    """
    m = tuple(m) if isinstance(m, (tuple, list)) else (m,)
    if isinstance(points, Constellation):
        result = complex(1)
        for factor in points.factors:
            result *= _phase_average(factor, m)
        return result
    points = [tuple(p) if isinstance(p, (tuple, list)) else (p,) for p in points]
    if not points:
        raise ValueError("Average over an empty set")
    if any(len(p) != len(m) for p in points):
        raise DimError("Frequency and points have different dimensions")
    return _phase_average(points, m)


def average_bound(m: t.Sequence, eps) -> float:
    """Deviation ``2π‖m‖ε`` allowed between a constellation average and the indicator of ``m ∈ Λ*``."""
    m = tuple(m) if isinstance(m, (tuple, list)) else (m,)
    return 2 * math.pi * math.sqrt(sum(float(x) ** 2 for x in m)) * float(eps)
