"""Exact dense matrices.

A matrix is a tuple of row tuples. Integer matrices hold ``int`` entries, rational matrices hold :py:class:`fractions.Fraction`. Every function returns a new matrix.
"""
# Standard Library
import typing as t
from fractions import Fraction

# Oversampling
from oversampling.system.exactnum.rational import common_denominator
from oversampling.system.exceptions import DimError
from oversampling.system.exceptions import RankError


Matrix = t.Tuple[t.Tuple[t.Any, ...], ...]
IntMatrix = t.Tuple[t.Tuple[int, ...], ...]
RatMatrix = t.Tuple[t.Tuple[Fraction, ...], ...]


def rat_matrix(rows: t.Iterable[t.Iterable]) -> RatMatrix:
    result = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if result and len({len(row) for row in result}) != 1:
        raise DimError("Ragged matrix rows")
    return result


def int_matrix(rows: t.Iterable[t.Iterable]) -> IntMatrix:
    result = []
    for row in rows:
        out = []
        for x in row:
            x = Fraction(x)
            if x.denominator != 1:
                raise ValueError("Non-integer entry {x}".format(x=x))
            out.append(x.numerator)
        result.append(tuple(out))
    return tuple(result)


def identity(n: int, one=1) -> Matrix:
    zero = one - one
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def diagonal(values: t.Sequence) -> Matrix:
    n = len(values)
    zero = values[0] - values[0] if n else 0
    return tuple(tuple(values[i] if i == j else zero for j in range(n)) for i in range(n))


def shape(m: Matrix) -> t.Tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def columns(m: Matrix) -> t.List[tuple]:
    return [tuple(col) for col in zip(*m)]


def from_columns(cols: t.Sequence[t.Sequence]) -> Matrix:
    return tuple(zip(*cols))


def hstack(*blocks: Matrix) -> Matrix:
    rows = {len(b) for b in blocks}
    if len(rows) != 1:
        raise DimError("Blocks have different row counts")
    return tuple(sum((tuple(b[i]) for b in blocks), ()) for i in range(rows.pop()))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != shape(b)[0]:
        raise DimError("Cannot multiply {0} by {1}".format(shape(a), shape(b)))
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(a: Matrix, v: t.Sequence) -> tuple:
    if shape(a)[1] != len(v):
        raise DimError("Cannot multiply {0} by vector of length {1}".format(shape(a), len(v)))
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def scale(m: Matrix, s) -> Matrix:
    return tuple(tuple(x * s for x in row) for row in m)


def matpow(m: Matrix, k: int) -> RatMatrix:
    """Integer power; negative exponents invert first."""
    m = rat_matrix(m)
    if k < 0:
        m, k = inverse(m), -k
    result = identity(len(m), Fraction(1))
    while k:
        if k & 1:
            result = matmul(result, m)
        m = matmul(m, m)
        k >>= 1
    return result


def is_integer_matrix(m: Matrix) -> bool:
    return all(Fraction(x).denominator == 1 for row in m for x in row)


def clear_denominators(m: Matrix) -> t.Tuple[IntMatrix, int]:
    """Split a rational matrix into ``(D·m, D)`` with ``D`` the least common denominator."""
    d = common_denominator(x for row in m for x in row)
    return tuple(tuple(int(Fraction(x) * d) for x in row) for row in m), d


def det(m: Matrix) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    n, k = shape(m)
    if n != k:
        raise DimError("Determinant of a non-square {0}x{1} matrix".format(n, k))
    work = [[Fraction(x) for x in row] for row in m]
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            result = -result
        p = work[col][col]
        result *= p
        for r in range(col + 1, n):
            factor = work[r][col] / p
            if factor:
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return result


def inverse(m: Matrix) -> RatMatrix:
    """Gauss-Jordan inverse over the rationals.

    :raises RankError: singular matrix
    """
    n, k = shape(m)
    if n != k:
        raise DimError("Inverse of a non-square {0}x{1} matrix".format(n, k))
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise RankError("Singular matrix has no inverse")
        work[col], work[pivot] = work[pivot], work[col]
        p = work[col][col]
        work[col] = [x / p for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)
