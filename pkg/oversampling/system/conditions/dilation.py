"""Rational dilation matrices."""
# Standard Library
import logging
import typing as t
from fractions import Fraction
from functools import lru_cache

import numpy as np

# Oversampling
from oversampling.system import DEFAULT_SETTINGS
from oversampling.system import Settings
from oversampling.system.exactnum import matrix as mx
from oversampling.system.exactnum.rational import as_rational
from oversampling.system.exceptions import BadDilation
from oversampling.system.exceptions import DimError
from oversampling.system.exceptions import InputError
from oversampling.system.exceptions import Unsupported


logger = logging.getLogger(__name__)


class DilationSpec:
    """A rational dilation ``A`` together with ``B = Aᵀ``.

    Expansiveness is certified at construction: exactly in one dimension, and from numpy eigenvalues with a safety margin otherwise.
    """

    def __init__(self, matrix: mx.Matrix, settings: Settings = DEFAULT_SETTINGS):
        matrix = mx.rat_matrix(matrix)
        n, k = mx.shape(matrix)
        if n == 0 or n != k:
            raise DimError("Dilation must be a square matrix, got {0}x{1}".format(n, k))
        if mx.det(matrix) == 0:
            raise BadDilation("Dilation matrix is singular")
        self.matrix = matrix
        self.n = n
        self.expansive = self._check_expansive(settings.expansive_margin)

    @classmethod
    def from_rows(cls, rows: t.Sequence[t.Sequence], settings: Settings = DEFAULT_SETTINGS) -> "DilationSpec":
        """Parse rows of exact entries; floats mean an irrational dilation and are refused.

        :raises Unsupported: a float entry
        """
        try:
            parsed = [[as_rational(x) for x in row] for row in rows]
        except InputError as e:
            raise Unsupported("Only rational dilations are supported: {0}".format(e)) from e
        return cls(parsed, settings)

    @classmethod
    def scalar(cls, a, n: int = 1, settings: Settings = DEFAULT_SETTINGS) -> "DilationSpec":
        """The dilation ``a·I``."""
        return cls(mx.diagonal([Fraction(a)] * n), settings)

    def _check_expansive(self, margin: float) -> bool:
        if self.n == 1:
            return abs(self.matrix[0][0]) > 1
        eigenvalues = np.linalg.eigvals(np.array(self.matrix, dtype=float))
        return bool(np.all(np.abs(eigenvalues) > 1 + margin))

    def require_expansive(self):
        if not self.expansive:
            raise BadDilation("Dilation {0!r} is not expansive".format(self))

    @property
    def transpose(self) -> mx.RatMatrix:
        """The matrix ``B = Aᵀ`` acting on the frequency side."""
        return mx.transpose(self.matrix)

    @property
    def is_integer(self) -> bool:
        return mx.is_integer_matrix(self.matrix)

    @property
    def scalar_value(self) -> t.Optional[Fraction]:
        """``a`` when the dilation is ``a·I``, else ``None``."""
        a = self.matrix[0][0]
        if self.matrix == mx.diagonal([a] * self.n):
            return a
        return None

    @property
    def abs_det(self) -> Fraction:
        return abs(mx.det(self.matrix))

    def power(self, j: int) -> mx.RatMatrix:
        """``Aʲ`` for any integer ``j``."""
        return _power(self.matrix, j)

    def power_transpose(self, j: int) -> mx.RatMatrix:
        """``Bʲ`` for any integer ``j``."""
        return _power(self.transpose, j)

    def conjugate(self, p: mx.Matrix) -> "DilationSpec":
        """The dilation ``P⁻¹·A·P``."""
        p = mx.rat_matrix(p)
        return DilationSpec(mx.matmul(mx.matmul(mx.inverse(p), self.matrix), p))

    def __eq__(self, other) -> bool:
        if not isinstance(other, DilationSpec):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self) -> str:
        rows = "; ".join(", ".join(str(x) for x in row) for row in self.matrix)
        return "DilationSpec([{0}])".format(rows)


@lru_cache(maxsize=512)
def _power(m: mx.RatMatrix, j: int) -> mx.RatMatrix:
    return mx.matpow(m, j)
