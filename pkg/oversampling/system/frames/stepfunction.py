"""Piecewise constant functions on the frequency axis.

Breakpoints are rationals and values live in ℚ(√d) + iℚ(√d), so sums, products, dilations and integrals stay exact.
"""
# Standard Library
import logging
import typing as t
from fractions import Fraction

from sortedcontainers import SortedDict
from sortedcontainers import SortedSet

# Oversampling
from oversampling.system.exactnum.quadratic import DEFAULT_RADICAND
from oversampling.system.exactnum.quadratic import ZERO
from oversampling.system.exactnum.quadratic import ComplexQuad
from oversampling.system.exactnum.quadratic import QuadScalar
from oversampling.system.exactnum.rational import as_rational


logger = logging.getLogger(__name__)

Interval = t.Tuple[Fraction, Fraction]
Scalar = t.Union[ComplexQuad, QuadScalar, int, Fraction]


class StepFunction:
    """Complex step function with finitely many rational breakpoints, zero outside them.

    Internally a :py:class:`sortedcontainers.SortedDict` maps each breakpoint to the value taken on ``[breakpoint, next breakpoint)``; the last breakpoint carries zero. The form is canonical: no zero-width intervals, no neighbours with equal values and no zero intervals at either end, so two step functions are equal exactly when their tables are.

    When ``period`` is set the function is one period of a multiplicatively periodic function, ``D(period·ξ) = D(ξ)``, stored on ``[-period, -1) ∪ [1, period)``; :py:meth:`evaluate` folds its argument into that domain.
    """

    def __init__(self, breakpoints: t.Sequence = (), values: t.Sequence[Scalar] = (), radicand: int = DEFAULT_RADICAND,
                 period: t.Optional[Fraction] = None):
        breakpoints = [as_rational(b) for b in breakpoints]
        if breakpoints and len(values) != len(breakpoints) - 1:
            raise ValueError("Need one value per interval: {0} breakpoints and {1} values".format(
                len(breakpoints), len(values)))
        if not breakpoints and values:
            raise ValueError("Values given without breakpoints")
        if any(b >= c for b, c in zip(breakpoints, breakpoints[1:])):
            raise ValueError("Breakpoints must be strictly increasing")
        self.radicand = radicand
        self.period = Fraction(period) if period is not None else None
        self._table = SortedDict()
        for lo, value in zip(breakpoints, values):
            self._table[lo] = ComplexQuad.coerce(value)
        if breakpoints:
            self._table[breakpoints[-1]] = ZERO
        self._canonicalize()

    @classmethod
    def _from_table(cls, table: t.Iterable[t.Tuple[Fraction, ComplexQuad]], radicand: int,
                    period: t.Optional[Fraction] = None) -> "StepFunction":
        result = cls(radicand=radicand, period=period)
        result._table = SortedDict(table)
        result._canonicalize()
        return result

    @classmethod
    def zero(cls, radicand: int = DEFAULT_RADICAND) -> "StepFunction":
        return cls(radicand=radicand)

    @classmethod
    def indicator(cls, lo, hi, value: Scalar = 1, radicand: int = DEFAULT_RADICAND) -> "StepFunction":
        """``value`` on ``[lo, hi)``."""
        return cls([lo, hi], [value], radicand=radicand)

    @classmethod
    def from_pieces(cls, pieces: t.Iterable[t.Tuple[t.Any, t.Any, Scalar]],
                    radicand: int = DEFAULT_RADICAND) -> "StepFunction":
        """Sum of ``value·χ[lo, hi)`` over the pieces."""
        result = cls.zero(radicand)
        for lo, hi, value in pieces:
            result = result + cls.indicator(lo, hi, value, radicand)
        return result

    def _canonicalize(self):
        merged = []
        previous = None
        for x, value in self._table.items():
            if previous is not None and value == previous:
                continue
            merged.append((x, value))
            previous = value
        # Leading zero interval and everything already zero at the left edge
        while merged and not merged[0][1]:
            merged.pop(0)
        self._table = SortedDict(merged)

    @property
    def breakpoints(self) -> t.List[Fraction]:
        return list(self._table.keys())

    @property
    def values(self) -> t.List[ComplexQuad]:
        """Value on each interval between consecutive breakpoints."""
        return list(self._table.values())[:-1]

    def intervals(self) -> t.Iterator[t.Tuple[Fraction, Fraction, ComplexQuad]]:
        """``(lo, hi, value)`` for every interval, zero ones included."""
        keys = self._table.keys()
        values = self._table.values()
        for i in range(len(keys) - 1):
            yield keys[i], keys[i + 1], values[i]

    def support(self) -> t.List[Interval]:
        """Maximal intervals where the function does not vanish."""
        result = []
        for lo, hi, value in self.intervals():
            if not value:
                continue
            if result and result[-1][1] == lo:
                result[-1] = (result[-1][0], hi)
            else:
                result.append((lo, hi))
        return result

    def is_zero(self) -> bool:
        return not self._table

    def __bool__(self) -> bool:
        return not self.is_zero()

    @property
    def max_abs(self) -> Fraction:
        """``max |ξ|`` over the closure of the support, zero for the zero function."""
        if self.is_zero():
            return Fraction(0)
        return max(abs(self.breakpoints[0]), abs(self.breakpoints[-1]))

    @property
    def min_abs(self) -> Fraction:
        """Distance from 0 to the closure of the support, zero for the zero function."""
        distances = []
        for lo, hi in self.support():
            if lo <= 0 <= hi:
                return Fraction(0)
            distances.append(min(abs(lo), abs(hi)))
        return min(distances) if distances else Fraction(0)

    def away_from_zero(self) -> bool:
        """Whether 0 lies outside the closure of the support."""
        return self.is_zero() or self.min_abs > 0

    def _fold(self, x: Fraction) -> Fraction:
        """Move ``x`` into ``[1, a)`` or ``[-a, -1)`` along its orbit under multiplication by ``a``."""
        a = self.period
        if x > 0:
            while x >= a:
                x = x / a
            while x < 1:
                x = x * a
        else:
            while x < -a:
                x = x / a
            while x >= -1:
                x = x * a
        return x

    def evaluate(self, x) -> ComplexQuad:
        """Value at ``x``; floats are converted exactly."""
        x = Fraction(x)
        if self.period is not None:
            if x == 0:
                return ZERO
            x = self._fold(x)
        return self._lookup(x)

    def _lookup(self, x: Fraction) -> ComplexQuad:
        index = self._table.bisect_right(x) - 1
        if index < 0:
            return ZERO
        return self._table.values()[index]

    __call__ = evaluate

    def _combine(self, other: "StepFunction", op: t.Callable[[ComplexQuad, ComplexQuad], ComplexQuad]) -> "StepFunction":
        points = SortedSet(self._table.keys())
        points.update(other._table.keys())
        table = [(x, op(self._lookup(x), other._lookup(x))) for x in points]
        return StepFunction._from_table(table, self.radicand)

    def _scalar_map(self, op: t.Callable[[ComplexQuad], ComplexQuad]) -> "StepFunction":
        return StepFunction._from_table([(x, op(v)) for x, v in self._table.items()], self.radicand)

    def __add__(self, other: "StepFunction") -> "StepFunction":
        if not isinstance(other, StepFunction):
            return NotImplemented
        return self._combine(other, lambda u, v: u + v)

    def __sub__(self, other: "StepFunction") -> "StepFunction":
        if not isinstance(other, StepFunction):
            return NotImplemented
        return self._combine(other, lambda u, v: u - v)

    def __neg__(self) -> "StepFunction":
        return self._scalar_map(lambda v: -v)

    def __mul__(self, other: t.Union["StepFunction", Scalar]) -> "StepFunction":
        if isinstance(other, StepFunction):
            return self._combine(other, lambda u, v: u * v)
        if isinstance(other, (ComplexQuad, QuadScalar, int, Fraction)):
            factor = ComplexQuad.coerce(other)
            return self._scalar_map(lambda v: v * factor)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> "StepFunction":
        return self._scalar_map(lambda v: v.conjugate())

    def abs2(self) -> "StepFunction":
        """Pointwise ``|f|²``."""
        return self._scalar_map(lambda v: ComplexQuad.coerce(v.abs2()))

    def translate(self, shift) -> "StepFunction":
        """``g(ξ) = f(ξ - shift)``."""
        shift = Fraction(shift)
        return StepFunction._from_table([(x + shift, v) for x, v in self._table.items()], self.radicand)

    def dilate(self, factor) -> "StepFunction":
        """``g(ξ) = f(factor·ξ)`` for a nonzero rational factor."""
        factor = Fraction(factor)
        if factor == 0:
            raise ValueError("Dilation factor must be nonzero")
        if factor > 0:
            return StepFunction._from_table([(x / factor, v) for x, v in self._table.items()], self.radicand)
        # Orientation flips; intervals [lo, hi) become [hi/r, lo/r) up to endpoints
        table = [(hi / factor, value) for lo, hi, value in self.intervals()]
        if table:
            table.append((self.breakpoints[0] / factor, ZERO))
        return StepFunction._from_table(table, self.radicand)

    def restrict(self, lo, hi) -> "StepFunction":
        """Product with the indicator of ``[lo, hi)``."""
        return self * StepFunction.indicator(lo, hi, 1, self.radicand)

    def integrate(self) -> ComplexQuad:
        """``∫ f`` as the exact sum of value times width."""
        total = ZERO
        for lo, hi, value in self.intervals():
            total = total + value * (hi - lo)
        return total

    def sup_abs2(self) -> QuadScalar:
        """``max |f|²`` over the intervals, zero for the zero function."""
        best = QuadScalar(0, 0, self.radicand)
        for value in self._table.values():
            best = max(best, value.abs2())
        return best

    def first_deviation(self, target: ComplexQuad) -> t.Optional[t.Tuple[Fraction, Fraction, ComplexQuad]]:
        """Leftmost interval on which the function differs from ``target``.

        For periodic functions only the stored domain ``[-a, -1) ∪ [1, a)`` is inspected; otherwise the whole line is, so a nonzero target always deviates outside the support.
        """
        if self.period is not None:
            a = self.period
            domain = [(-a, Fraction(-1)), (Fraction(1), a)]
            for lo, hi in domain:
                window = (self - StepFunction.indicator(lo, hi, target, self.radicand)).restrict(lo, hi)
                for left, right, value in window.intervals():
                    if value:
                        return left, right, value + target
            return None
        for lo, hi, value in self.intervals():
            if value != target:
                return lo, hi, value
        if target and self.is_zero():
            return Fraction(0), Fraction(1), ZERO
        return None

    def with_period(self, period) -> "StepFunction":
        return StepFunction._from_table(list(self._table.items()), self.radicand, period)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StepFunction):
            return NotImplemented
        return list(self._table.items()) == list(other._table.items()) and self.period == other.period

    def __hash__(self):
        return hash((tuple(self._table.items()), self.period))

    def __repr__(self) -> str:
        pieces = ", ".join("[{0}, {1}): {2}".format(lo, hi, value) for lo, hi, value in self.intervals() if value)
        suffix = ", period={0}".format(self.period) if self.period is not None else ""
        return "StepFunction({{{0}}}{1})".format(pieces, suffix)
