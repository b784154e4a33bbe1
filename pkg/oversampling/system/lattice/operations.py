"""Lattice duality, sums, intersections, quotients and coset representatives."""
# Standard Library
import itertools
import logging
import math
import typing as t
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

# Oversampling
from oversampling.system.exactnum import matrix as mx
from oversampling.system.exactnum.normalforms import hnf
from oversampling.system.exactnum.normalforms import snf
from oversampling.system.exactnum.rational import Vector
from oversampling.system.exceptions import DimError
from oversampling.system.exceptions import NotALattice
from oversampling.system.exceptions import NotSublattice
from oversampling.system.lattice.lattice import Lattice


logger = logging.getLogger(__name__)


def _same_dim(*lattices: Lattice) -> int:
    dims = {lattice.dim for lattice in lattices}
    if len(dims) != 1:
        raise DimError("Lattices of different dimensions: {0}".format(sorted(dims)))
    return dims.pop()


def dual(lattice: Lattice) -> Lattice:
    """Dual lattice Λ* = {η : ⟨η, λ⟩ ∈ Z for all λ ∈ Λ}, with basis (Pᵀ)⁻¹."""
    return Lattice(mx.transpose(lattice.inverse_basis))


def lattice_sum(*lattices: Lattice) -> Lattice:
    """Lattice generated by the union of the bases.

    Rational lattices are always commensurable, so the sum is discrete.
    """
    _same_dim(*lattices)
    return Lattice(mx.hstack(*(lattice.basis for lattice in lattices)))


def intersect(first: Lattice, second: Lattice) -> Lattice:
    """Largest common sublattice.

    Points ``P₁a = P₂b`` are read off the integer kernel of ``[P₁ | -P₂]``, which the Hermite transform exposes in its trailing columns.
    """
    n = _same_dim(first, second)
    stacked, _ = mx.clear_denominators(mx.hstack(first.basis, mx.scale(second.basis, -1)))
    _, u = hnf(stacked)
    kernel = [col[:n] for col in mx.columns(u)[n:]]
    points = [mx.matvec(first.basis, tuple(Fraction(c) for c in coefficients)) for coefficients in kernel]
    try:
        return Lattice.from_columns(points)
    except NotALattice as e:
        raise NotALattice("Lattices are not commensurable") from e


def member(lattice: Lattice, x: t.Sequence) -> bool:
    """Whether ``x`` is a lattice point.

    :raises DimError: dimension mismatch
    """
    return tuple(x) in lattice


def is_sublattice(sub: Lattice, parent: Lattice) -> bool:
    """Whether every basis vector of ``sub`` lies in ``parent``."""
    _same_dim(sub, parent)
    return all(col in parent for col in sub.columns)


def _require_sublattice(parent: Lattice, sub: Lattice):
    if not is_sublattice(sub, parent):
        raise NotSublattice("{sub!r} is not contained in {parent!r}".format(sub=sub, parent=parent))


def quotient_order(parent: Lattice, sub: Lattice) -> int:
    """Order of the quotient group Λ/Γ, that is d(Γ)/d(Λ).

    :raises NotSublattice: Γ ⊄ Λ
    """
    _require_sublattice(parent, sub)
    order = sub.det / parent.det
    assert order.denominator == 1, "Index of a sublattice must be an integer"
    return order.numerator


@dataclass(frozen=True)
class SmithBasis:
    """Adapted bases of a sublattice pair.

    ``vectors`` is a basis of Λ and ``divisors[i]·vectors[i]`` a basis of Γ, with each divisor dividing the next.
    """

    parent: Lattice
    sub: Lattice
    vectors: t.Tuple[Vector, ...]
    divisors: t.Tuple[int, ...]

    @property
    def order(self) -> int:
        return math.prod(self.divisors)

    @property
    def modified(self) -> t.Tuple[Vector, ...]:
        """Basis ``wᵢ = vᵢ + vₙ`` for ``i < n`` and ``wₙ = vₙ``.

        When the last divisor is at least 2 no ``wᵢ`` lies in Γ.
        """
        last = self.vectors[-1]
        head = [tuple(x + y for x, y in zip(v, last)) for v in self.vectors[:-1]]
        return tuple(head + [last])

    @property
    def matrix(self) -> mx.RatMatrix:
        return mx.from_columns(self.vectors)

    def coset_of(self, x: t.Sequence) -> t.Tuple[int, ...]:
        """Coordinates of the coset ``x + Γ`` in ``Z/α₁ × … × Z/αₙ``.

        :raises NotSublattice: ``x`` is not a point of Λ
        """
        coords = mx.matvec(_inverse(self.matrix), tuple(Fraction(v) for v in x))
        if any(c.denominator != 1 for c in coords):
            raise NotSublattice("{0} is not a point of the parent lattice".format(tuple(x)))
        return tuple(int(c) % a for c, a in zip(coords, self.divisors))

    def representative(self, coset: t.Sequence[int]) -> Vector:
        """The point ``Σ cᵢvᵢ`` of a coset given by its coordinates."""
        n = len(self.vectors)
        return tuple(sum((Fraction(c) * v[row] for c, v in zip(coset, self.vectors)), Fraction(0)) for row in range(n))


@lru_cache(maxsize=1024)
def _inverse(m: mx.RatMatrix) -> mx.RatMatrix:
    return mx.inverse(m)


def smith_basis(parent: Lattice, sub: Lattice) -> SmithBasis:
    """Adapted bases of Λ ⊃ Γ from the Smith form of ``P⁻¹G``.

    With ``D = U·(P⁻¹G)·V`` the columns of ``P·U⁻¹`` are a basis of Λ and ``G·V = P·U⁻¹·D``.

    :raises NotSublattice: Γ ⊄ Λ
    """
    _require_sublattice(parent, sub)
    relative = mx.int_matrix(mx.matmul(parent.inverse_basis, sub.basis))
    d, u, _ = snf(relative)
    vectors = mx.matmul(parent.basis, mx.inverse(u))
    divisors = tuple(d[i][i] for i in range(len(d)))
    return SmithBasis(parent=parent, sub=sub, vectors=tuple(mx.columns(vectors)), divisors=divisors)


@dataclass(frozen=True)
class Transversal:
    """One point of Λ from every coset of Λ/Γ."""

    parent: Lattice
    sub: Lattice
    points: t.Tuple[Vector, ...]

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)


def reduce_modulo(sub: Lattice, x: t.Sequence) -> Vector:
    """Representative of ``x + Γ`` in the half-open parallelepiped spanned by the basis of Γ."""
    coords = sub.coordinates(x)
    shift = tuple(Fraction(math.floor(c)) for c in coords)
    return tuple(Fraction(v) - s for v, s in zip(x, mx.matvec(sub.basis, shift)))


def exact_transversal(parent: Lattice, sub: Lattice) -> Transversal:
    """Coset representatives of Λ/Γ inside the fundamental parallelepiped of Γ anchored at 0.

    Points are ordered by their coordinates read from the last axis to the first.

    :raises NotSublattice: Γ ⊄ Λ
    """
    basis = smith_basis(parent, sub)
    points = set()
    for coset in itertools.product(*(range(a) for a in basis.divisors)):
        points.add(reduce_modulo(sub, basis.representative(coset)))
    ordered = tuple(sorted(points, key=lambda p: tuple(reversed(p))))
    assert len(ordered) == basis.order, "Transversal must hit every coset once"
    logger.debug("Transversal of index %d", len(ordered))
    return Transversal(parent=parent, sub=sub, points=ordered)
