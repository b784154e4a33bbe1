"""Exact scalars of a quadratic field ℚ(√d) and their complex pairs."""
# Standard Library
import math
import typing as t
from fractions import Fraction
from functools import lru_cache
from functools import total_ordering

# Oversampling
from oversampling.system.exceptions import RadicandMismatch


DEFAULT_RADICAND = 2


@lru_cache(maxsize=64)
def is_squarefree(d: int) -> bool:
    if d < 2:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


@total_ordering
class QuadScalar:
    """Exact value ``a + b·√d`` with rational ``a``, ``b``.

    The radicand only matters when ``b`` is nonzero: a rational combines with a scalar of any radicand, while two irrational scalars with different radicands raise :py:class:`RadicandMismatch`.
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, a: t.Union[int, Fraction] = 0, b: t.Union[int, Fraction] = 0, d: int = DEFAULT_RADICAND):
        if not is_squarefree(d):
            raise ValueError("Radicand must be a square-free integer >= 2, got {d}".format(d=d))
        self._a = Fraction(a)
        self._b = Fraction(b)
        self._d = d

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    @classmethod
    def sqrt(cls, d: int = DEFAULT_RADICAND) -> "QuadScalar":
        return cls(0, 1, d)

    def is_rational(self) -> bool:
        return self._b == 0

    def _coerce(self, other) -> t.Optional["QuadScalar"]:
        if isinstance(other, QuadScalar):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return QuadScalar(other, 0, self._d)
        return None

    def _common_radicand(self, other: "QuadScalar") -> int:
        if self._b == 0:
            return other.d
        if other.b == 0 or other.d == self._d:
            return self._d
        raise RadicandMismatch("Cannot combine √{0} and √{1}".format(self._d, other.d))

    def __repr__(self) -> str:
        return "QuadScalar({0}, {1}, d={2})".format(self._a, self._b, self._d)

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        return "{0}{1:+}√{2}".format(self._a, self._b, self._d)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._a != other.a or self._b != other.b:
            return False
        return self._b == 0 or self._d == other.d

    def __hash__(self):
        if not self._b:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __neg__(self) -> "QuadScalar":
        return QuadScalar(-self._a, -self._b, self._d)

    def __add__(self, other) -> "QuadScalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self._common_radicand(other)
        return QuadScalar(self._a + other.a, self._b + other.b, d)

    __radd__ = __add__

    def __sub__(self, other) -> "QuadScalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QuadScalar":
        return (-self) + other

    def __mul__(self, other) -> "QuadScalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        d = self._common_radicand(other)
        return QuadScalar(
            self._a * other.a + d * self._b * other.b,
            self._a * other.b + self._b * other.a,
            d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadScalar":
        """Galois conjugate ``a - b·√d``."""
        return QuadScalar(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Field norm ``a² - d·b²``, zero only for the zero scalar."""
        return self._a * self._a - self._d * self._b * self._b

    def __truediv__(self, other) -> "QuadScalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("Division by zero quadratic scalar")
        self._common_radicand(other)
        numerator = self * other.conjugate()
        n = other.norm()
        return QuadScalar(numerator.a / n, numerator.b / n, numerator.d)

    def __rtruediv__(self, other) -> "QuadScalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def sign(self) -> int:
        """Exact sign of ``a + b·√d``."""
        sa, sb = _sign(self._a), _sign(self._b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # Opposite signs: the larger of a² and d·b² decides
        if self._a * self._a > self._d * self._b * self._b:
            return sa
        return sb

    def __lt__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return (self - other).sign() < 0

    def __abs__(self) -> "QuadScalar":
        return -self if self.sign() < 0 else self

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * math.sqrt(self._d)


class ComplexQuad:
    """Complex number whose real and imaginary parts are :py:class:`QuadScalar`."""

    __slots__ = ("_re", "_im")

    def __init__(self, re: t.Union[QuadScalar, int, Fraction] = 0, im: t.Union[QuadScalar, int, Fraction] = 0):
        if not isinstance(re, QuadScalar):
            re = QuadScalar(re, 0, im.d if isinstance(im, QuadScalar) else DEFAULT_RADICAND)
        if not isinstance(im, QuadScalar):
            im = QuadScalar(im, 0, re.d)
        re._common_radicand(im)
        self._re = re
        self._im = im

    @property
    def re(self) -> QuadScalar:
        return self._re

    @property
    def im(self) -> QuadScalar:
        return self._im

    @property
    def d(self) -> int:
        return self._re.d if self._re.b else self._im.d

    @classmethod
    def coerce(cls, value) -> "ComplexQuad":
        if isinstance(value, ComplexQuad):
            return value
        if isinstance(value, QuadScalar):
            return cls(value, QuadScalar(0, 0, value.d))
        return cls(value, 0)

    def __repr__(self) -> str:
        return "ComplexQuad({0!r}, {1!r})".format(self._re, self._im)

    def __str__(self) -> str:
        if not self._im:
            return str(self._re)
        return "({0}) + ({1})i".format(self._re, self._im)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (ComplexQuad, QuadScalar, int, Fraction)):
            return NotImplemented
        other = self.coerce(other)
        return self._re == other.re and self._im == other.im

    def __hash__(self):
        if not self._im:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self) -> bool:
        return bool(self._re) or bool(self._im)

    def __neg__(self) -> "ComplexQuad":
        return ComplexQuad(-self._re, -self._im)

    def __add__(self, other) -> "ComplexQuad":
        other = self.coerce(other)
        return ComplexQuad(self._re + other.re, self._im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "ComplexQuad":
        return self + (-self.coerce(other))

    def __rsub__(self, other) -> "ComplexQuad":
        return self.coerce(other) - self

    def __mul__(self, other) -> "ComplexQuad":
        other = self.coerce(other)
        return ComplexQuad(
            self._re * other.re - self._im * other.im,
            self._re * other.im + self._im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "ComplexQuad":
        return ComplexQuad(self._re, -self._im)

    def abs2(self) -> QuadScalar:
        """Squared modulus ``re² + im²``."""
        return self._re * self._re + self._im * self._im

    def __complex__(self) -> complex:
        return complex(float(self._re), float(self._im))


ZERO = ComplexQuad(0, 0)
ONE = ComplexQuad(1, 0)
