"""Rational scalars and vectors.

Rationals are :py:class:`fractions.Fraction`, which keeps numerator and denominator in lowest terms with a positive denominator. This module only adds parsing, formatting and a few integer helpers.
"""
# Standard Library
import math
import typing as t
from fractions import Fraction

# Oversampling
from oversampling.system.exceptions import InputError


Rational = Fraction
RationalLike = t.Union[int, str, Fraction]
Vector = t.Tuple[Fraction, ...]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an integer, a ``"p/q"`` string or a Fraction into a Fraction.

    Floats are refused: every rational entering the exact subsystems must be given exactly.

    :raises InputError: unparseable value
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise InputError("Expected an exact rational, got {value!r}".format(value=value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InputError("Cannot parse rational {value!r}: {error}".format(value=value, error=e)) from e
    raise InputError("Expected an exact rational, got {value!r}".format(value=value))


def format_rational(value: Fraction) -> str:
    """Serialize as ``"p/q"``, omitting ``q`` when it is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "{0}/{1}".format(value.numerator, value.denominator)


def as_vector(values: t.Iterable[RationalLike]) -> Vector:
    return tuple(as_rational(v) for v in values)


def dot(v1: t.Sequence[Fraction], v2: t.Sequence[Fraction]) -> Fraction:
    return sum((x1 * x2 for x1, x2 in zip(v1, v2)), Fraction(0))


def is_integral(value: Fraction) -> bool:
    return Fraction(value).denominator == 1


def lcm(*values: int) -> int:
    result = 1
    for v in values:
        result = result * v // math.gcd(result, v) if v else result
    return result


def common_denominator(values: t.Iterable[Fraction]) -> int:
    """Least common multiple of the denominators."""
    return lcm(*(Fraction(v).denominator for v in values))


def dist_to_integer(value: Fraction) -> Fraction:
    """Exact distance of a rational to the nearest integer."""
    value = Fraction(value)
    frac = value - math.floor(value)
    return min(frac, 1 - frac)


def round_half_up(value: Fraction) -> int:
    """Nearest integer, ties towards positive infinity."""
    return math.floor(Fraction(value) + Fraction(1, 2))


def valuation(value: int, prime_like: int) -> int:
    """Largest k with ``prime_like**k`` dividing ``value``.

    ``prime_like`` only needs to exceed 1; ``valuation(0, b)`` is undefined and raises.
    """
    if value == 0:
        raise ValueError("Valuation of zero")
    if prime_like < 2:
        raise ValueError("Base must exceed 1")
    k = 0
    while value % prime_like == 0:
        value //= prime_like
        k += 1
    return k
