"""Approximate duals of finite sets.

A point ``x`` belongs to the ε-approximate dual of a finite set ``F`` when every inner product ``⟨x, g⟩``, ``g ∈ F``, lies within ε of an integer. Inputs made only of rationals are decided exactly; anything involving floats is decided in double precision with a small slack.
"""
# Standard Library
import itertools
import logging
import typing as t
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

# Oversampling
from oversampling.system import DEFAULT_SETTINGS
from oversampling.system import Settings
from oversampling.system.exactnum.rational import dist_to_integer
from oversampling.system.exactnum.rational import dot
from oversampling.system.exceptions import DimError
from oversampling.system.lattice import Lattice
from oversampling.system.lattice import dual


logger = logging.getLogger(__name__)

Number = t.Union[int, Fraction, float]


def _exact(value) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


@dataclass(frozen=True)
class FiniteSet:
    """A finite non-empty set of vectors, rational or float."""

    vectors: t.Tuple[t.Tuple[Number, ...], ...]

    def __post_init__(self):
        if not self.vectors:
            raise ValueError("FiniteSet must not be empty")
        if len({len(v) for v in self.vectors}) != 1:
            raise DimError("Vectors of different lengths in FiniteSet")

    @classmethod
    def of(cls, *vectors) -> "FiniteSet":
        """Build from vectors or bare scalars, scalars being 1-D vectors."""
        return cls(tuple(tuple(v) if isinstance(v, (tuple, list)) else (v,) for v in vectors))

    @classmethod
    def from_lattice(cls, lattice: Lattice) -> "FiniteSet":
        """The basis vectors of a lattice."""
        return cls(tuple(lattice.columns))

    @property
    def dim(self) -> int:
        return len(self.vectors[0])

    @property
    def exact(self) -> bool:
        return all(_exact(x) for v in self.vectors for x in v)

    def as_array(self) -> np.ndarray:
        return np.array([[float(x) for x in v] for v in self.vectors], dtype=float)


def approx_dual_member(f: FiniteSet, eps: Number, x: t.Sequence[Number], settings: Settings = DEFAULT_SETTINGS) -> bool:
    """Whether ``x`` lies in the ε-approximate dual of ``f``."""
    if len(x) != f.dim:
        raise DimError("Point of length {0} against set of dimension {1}".format(len(x), f.dim))
    if f.exact and all(_exact(v) for v in x):
        bound = Fraction(eps)
        return all(dist_to_integer(dot(x, g)) <= bound for g in f.vectors)
    products = f.as_array() @ np.array([float(v) for v in x], dtype=float)
    distances = np.abs(products - np.round(products))
    return bool(np.all(distances <= float(eps) + settings.float_slack))


def _grid(n: int, radius: int) -> t.List[t.Tuple[int, ...]]:
    """Integer points of the cube of given half width, by Euclidean norm then lexicographically."""
    points = itertools.product(range(-radius, radius + 1), repeat=n)
    return sorted(points, key=lambda z: (sum(c * c for c in z), z))


def approx_dual_decompose(f: FiniteSet, eps: Number, x: t.Sequence[Number], radius: int,
                          settings: Settings = DEFAULT_SETTINGS) -> t.Optional[t.Tuple[int, ...]]:
    """Find ``z ∈ Zⁿ`` with ``‖z‖∞ <= radius`` and ``x - z`` in the ε-approximate dual of ``f``.

    Among valid ``z`` the one with smallest Euclidean norm is returned, ties broken lexicographically.

    :return: ``z`` or ``None`` when the cube holds no valid point; ``None`` says nothing about larger radii
    """
    if len(x) != f.dim:
        raise DimError("Point of length {0} against set of dimension {1}".format(len(x), f.dim))
    n = f.dim
    if f.exact and all(_exact(v) for v in x):
        bound = Fraction(eps)
        for z in _grid(n, radius):
            shifted = tuple(Fraction(v) - c for v, c in zip(x, z))
            if all(dist_to_integer(dot(shifted, g)) <= bound for g in f.vectors):
                return z
        return None

    # Vectorized float scan over the whole cube
    axes = np.arange(-radius, radius + 1)
    grid = np.stack(np.meshgrid(*([axes] * n), indexing="ij"), axis=-1).reshape(-1, n)
    shifted = np.array([float(v) for v in x]) - grid
    products = shifted @ f.as_array().T
    ok = np.all(np.abs(products - np.round(products)) <= float(eps) + settings.float_slack, axis=1)
    if not ok.any():
        logger.debug("No decomposition within radius %d", radius)
        return None
    valid = [tuple(int(c) for c in z) for z in grid[ok]]
    return min(valid, key=lambda z: (sum(c * c for c in z), z))


def _agrees(basis: FiniteSet, exact_dual: Lattice, eps: Number, samples: t.Sequence[t.Sequence[Fraction]],
            settings: Settings) -> bool:
    return all(approx_dual_member(basis, eps, p, settings) == (tuple(p) in exact_dual) for p in samples)


def agreement_threshold(lattice: Lattice, samples: t.Sequence[t.Sequence[Fraction]], floor: float = 1e-6,
                        settings: Settings = DEFAULT_SETTINGS) -> t.Optional[float]:
    """Threshold below which the approximate dual of a basis acts like the dual lattice on the samples.

    Bisects ε over ``[floor, 1/2]`` for the largest value at which approximate dual membership of the basis vectors agrees with exact membership in Λ* on every sample. Agreement is monotone in ε because exact dual points pass for every ε.

    :return: the threshold, or ``None`` when even ``floor`` disagrees
    """
    basis = FiniteSet.from_lattice(lattice)
    exact_dual = dual(lattice)
    lo, hi = Fraction(floor), Fraction(1, 2)
    if not _agrees(basis, exact_dual, lo, samples, settings):
        return None
    if _agrees(basis, exact_dual, hi, samples, settings):
        return float(hi)
    for _ in range(60):
        mid = (lo + hi) / 2
        if _agrees(basis, exact_dual, mid, samples, settings):
            lo = mid
        else:
            hi = mid
        if hi - lo < Fraction(floor) / 4:
            break
    return float(lo)

