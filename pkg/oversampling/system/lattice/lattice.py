"""Full-rank rational lattices in canonical Hermite form."""
# Standard Library
import logging
import math
import typing as t
from fractions import Fraction
from functools import cached_property

# Oversampling
from oversampling.system.exactnum import matrix as mx
from oversampling.system.exactnum.normalforms import hnf
from oversampling.system.exactnum.rational import Vector
from oversampling.system.exceptions import DimError
from oversampling.system.exceptions import NotALattice
from oversampling.system.exceptions import RankError


logger = logging.getLogger(__name__)


def _canonical_basis(generators: mx.Matrix) -> mx.RatMatrix:
    """Hermite basis of the lattice spanned by the columns of a rational matrix."""
    integer, denominator = mx.clear_denominators(generators)
    try:
        h, _ = hnf(integer)
    except RankError as e:
        raise NotALattice("Generators do not span a full rank lattice: {0}".format(e)) from e
    return tuple(tuple(Fraction(x, denominator) for x in row) for row in h)


class Lattice:
    """Full-rank lattice ``P·Zⁿ`` with rational ``P``.

    The constructor accepts any generating set, given as the columns of an ``n×k`` matrix with ``k >= n``, and stores the column Hermite form of it. Two lattices are equal exactly when their stored bases are equal.
    """

    def __init__(self, generators: mx.Matrix):
        generators = mx.rat_matrix(generators)
        if not generators:
            raise DimError("Lattice needs at least one dimension")
        self._basis = _canonical_basis(generators)

    @classmethod
    def from_columns(cls, columns: t.Sequence[t.Sequence]) -> "Lattice":
        return cls(mx.from_columns(columns))

    @classmethod
    def integer(cls, n: int) -> "Lattice":
        """The lattice Zⁿ."""
        return cls(mx.identity(n))

    @classmethod
    def scaled(cls, factor, n: int = 1) -> "Lattice":
        """The lattice ``factor·Zⁿ``."""
        return cls(mx.diagonal([Fraction(factor)] * n))

    @classmethod
    def diagonal(cls, factors: t.Sequence) -> "Lattice":
        return cls(mx.diagonal([Fraction(f) for f in factors]))

    @property
    def dim(self) -> int:
        return len(self._basis)

    @property
    def basis(self) -> mx.RatMatrix:
        return self._basis

    @property
    def columns(self) -> t.List[Vector]:
        return mx.columns(self._basis)

    @cached_property
    def det(self) -> Fraction:
        """Covolume d(Λ), the product of the Hermite pivots."""
        return math.prod((self._basis[i][i] for i in range(self.dim)), start=Fraction(1))

    @cached_property
    def inverse_basis(self) -> mx.RatMatrix:
        return mx.inverse(self._basis)

    def coordinates(self, x: t.Sequence) -> Vector:
        """Coordinates of ``x`` in the stored basis."""
        if len(x) != self.dim:
            raise DimError("Vector of length {0} in dimension {1}".format(len(x), self.dim))
        return mx.matvec(self.inverse_basis, tuple(Fraction(v) for v in x))

    def __contains__(self, x: t.Sequence) -> bool:
        return all(c.denominator == 1 for c in self.coordinates(x))

    def transform(self, m: mx.Matrix) -> "Lattice":
        """The image ``M·Λ`` under a nonsingular rational matrix."""
        return Lattice(mx.matmul(mx.rat_matrix(m), self._basis))

    def scale(self, factor) -> "Lattice":
        return Lattice(mx.scale(self._basis, Fraction(factor)))

    def is_integral(self) -> bool:
        """Whether the lattice lies inside Zⁿ."""
        return mx.is_integer_matrix(self._basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return self._basis == other._basis

    def __hash__(self):
        return hash(self._basis)

    def __repr__(self) -> str:
        rows = "; ".join(", ".join(str(x) for x in row) for row in self._basis)
        return "Lattice([{0}])".format(rows)
