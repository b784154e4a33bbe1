"""Hermite and Smith normal forms of integer matrices, with unimodular transforms.

Both reductions work on mutable row lists and record every elementary operation in the accompanying transform, so the returned identities ``M·U = [H | 0]`` and ``D = U·M·V`` hold exactly.
"""
# Standard Library
import typing as t

# Oversampling
from oversampling.system.exactnum.matrix import IntMatrix
from oversampling.system.exactnum.matrix import identity
from oversampling.system.exactnum.matrix import shape
from oversampling.system.exceptions import DimError
from oversampling.system.exceptions import RankError


def xgcd(a: int, b: int) -> t.Tuple[int, int, int]:
    """Extended Euclid.

    :return: ``(g, x, y)`` with ``x·a + y·b = g = gcd(a, b) >= 0``
    """
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def _to_lists(m: IntMatrix) -> t.List[t.List[int]]:
    return [list(row) for row in m]


def _freeze(m: t.List[t.List[int]]) -> IntMatrix:
    return tuple(tuple(row) for row in m)


class _ColumnWork:
    """A matrix and its column transform, updated together."""

    def __init__(self, m: IntMatrix):
        self.a = _to_lists(m)
        self.rows, self.cols = shape(m)
        self.u = _to_lists(identity(self.cols))

    def combine(self, i: int, j: int, x: int, y: int, z: int, w: int):
        """Replace columns (i, j) by (x·ci + y·cj, z·ci + w·cj)."""
        for mat in (self.a, self.u):
            for row in mat:
                ci, cj = row[i], row[j]
                row[i] = x * ci + y * cj
                row[j] = z * ci + w * cj

    def add(self, target: int, source: int, factor: int):
        for mat in (self.a, self.u):
            for row in mat:
                row[target] += factor * row[source]

    def negate(self, i: int):
        for mat in (self.a, self.u):
            for row in mat:
                row[i] = -row[i]


def hnf(m: IntMatrix) -> t.Tuple[IntMatrix, IntMatrix]:
    """Column Hermite normal form.

    For an ``n×k`` integer matrix whose columns span a rank ``n`` lattice, returns ``(H, U)`` with ``U`` unimodular ``k×k`` and ``M·U = [H | 0]``. ``H`` is ``n×n`` lower triangular with positive diagonal, and every entry left of a pivot satisfies ``0 <= H[i][j] < H[i][i]``. ``H`` depends only on the lattice spanned by the columns.

    :raises RankError: columns do not span a rank ``n`` lattice
    """
    n, k = shape(m)
    if k < n:
        raise RankError("{0} columns cannot span rank {1}".format(k, n))
    work = _ColumnWork(m)
    a = work.a
    for i in range(n):
        for j in range(i + 1, k):
            if a[i][j] == 0:
                continue
            p, q = a[i][i], a[i][j]
            g, x, y = xgcd(p, q)
            work.combine(i, j, x, y, -q // g, p // g)
        if a[i][i] == 0:
            raise RankError("Matrix has rank below {0}".format(n))
        if a[i][i] < 0:
            work.negate(i)
        for j in range(i):
            factor = a[i][j] // a[i][i]
            if factor:
                work.add(j, i, -factor)
    h = tuple(tuple(row[:n]) for row in a)
    return h, _freeze(work.u)


def snf(m: IntMatrix) -> t.Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form of a square nonsingular integer matrix.

    :return: ``(D, U, V)`` with ``D = U·M·V`` diagonal, positive, and each diagonal entry dividing the next
    :raises RankError: singular matrix
    """
    n, k = shape(m)
    if n != k:
        raise DimError("Smith form needs a square matrix, got {0}x{1}".format(n, k))
    a = _to_lists(m)
    u = _to_lists(identity(n))
    v = _to_lists(identity(n))

    def swap_rows(i, j):
        for mat in (a, u):
            mat[i], mat[j] = mat[j], mat[i]

    def swap_cols(i, j):
        for mat in (a, v):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def add_row(target, source, factor):
        for mat in (a, u):
            mat[target] = [x + factor * y for x, y in zip(mat[target], mat[source])]

    def add_col(target, source, factor):
        for mat in (a, v):
            for row in mat:
                row[target] += factor * row[source]

    for s in range(n):
        while True:
            entries = [(abs(a[i][j]), i, j) for i in range(s, n) for j in range(s, n) if a[i][j]]
            if not entries:
                raise RankError("Singular matrix has no Smith form")
            _, i, j = min(entries)
            if i != s:
                swap_rows(s, i)
            if j != s:
                swap_cols(s, j)

            clean = True
            for i in range(s + 1, n):
                if a[i][s]:
                    add_row(i, s, -(a[i][s] // a[s][s]))
                    clean = clean and a[i][s] == 0
            for j in range(s + 1, n):
                if a[s][j]:
                    add_col(j, s, -(a[s][j] // a[s][s]))
                    clean = clean and a[s][j] == 0
            if not clean:
                continue

            offender = next(
                (i for i in range(s + 1, n) for j in range(s + 1, n) if a[i][j] % a[s][s]),
                None,
            )
            if offender is None:
                break
            add_row(s, offender, 1)

        if a[s][s] < 0:
            for mat in (a, u):
                mat[s] = [-x for x in mat[s]]

    return _freeze(a), _freeze(u), _freeze(v)


def elementary_divisors(m: IntMatrix) -> t.Tuple[int, ...]:
    d, _, _ = snf(m)
    return tuple(d[i][i] for i in range(len(d)))
