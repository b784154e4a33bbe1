"""Generator sets of one dimensional affine systems and the named built-ins."""
# Standard Library
import logging
import math
import typing as t
from dataclasses import dataclass
from fractions import Fraction

# Oversampling
from oversampling.system.exactnum.quadratic import DEFAULT_RADICAND
from oversampling.system.exactnum.quadratic import QuadScalar
from oversampling.system.exceptions import BadDilation
from oversampling.system.exceptions import Unsupported
from oversampling.system.frames.stepfunction import StepFunction


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorSet:
    """Fourier transforms ``ψ̂₁, …, ψ̂_L`` of the generators together with the dilation ``a = p/q > 1``."""

    generators: t.Tuple[StepFunction, ...]
    dilation: Fraction
    radicand: int = DEFAULT_RADICAND
    away_from_zero: bool = True

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "dilation", Fraction(self.dilation))
        if self.dilation <= 1:
            raise BadDilation("Dilation must exceed 1, got {0}".format(self.dilation))
        if not self.generators:
            raise ValueError("At least one generator is needed")
        if self.away_from_zero:
            for index, psi in enumerate(self.generators):
                if not psi.away_from_zero():
                    raise Unsupported("Support of generator {0} touches 0: {1}".format(index, psi.support()))

    @classmethod
    def single(cls, psi: StepFunction, dilation, **kwargs) -> "GeneratorSet":
        return cls(generators=(psi,), dilation=dilation, radicand=psi.radicand, **kwargs)

    @property
    def p(self) -> int:
        return self.dilation.numerator

    @property
    def q(self) -> int:
        return self.dilation.denominator

    @property
    def max_abs(self) -> Fraction:
        """Largest ``|ξ|`` in the closure of any support."""
        return max(psi.max_abs for psi in self.generators)

    @property
    def min_abs(self) -> Fraction:
        """Smallest distance from 0 to a nonzero support; zero when every generator vanishes."""
        distances = [psi.min_abs for psi in self.generators if psi]
        return min(distances) if distances else Fraction(0)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def _inv_sqrt2() -> QuadScalar:
    return QuadScalar(0, Fraction(1, 2), 2)


def fig1() -> GeneratorSet:
    """Parseval generator for ``a = 3/2`` that stops being Parseval when oversampled by 2."""
    r = _inv_sqrt2()
    psi = StepFunction.from_pieces([
        (Fraction(4, 3), Fraction(3, 2), 1),
        (-1, Fraction(-2, 3), r),
        (1, Fraction(4, 3), r),
        (Fraction(3, 2), 2, r),
        (Fraction(-3, 2), -1, -r),
    ])
    return GeneratorSet.single(psi, Fraction(3, 2))


def shannon() -> GeneratorSet:
    """Dyadic Shannon wavelet ``χ[-1, -1/2) ∪ [1/2, 1)``."""
    psi = StepFunction.from_pieces([(-1, Fraction(-1, 2), 1), (Fraction(1, 2), 1, 1)])
    return GeneratorSet.single(psi, 2)


def class_one() -> GeneratorSet:
    """Dyadic Parseval wavelet whose negative dilates space is invariant under ``(1/2)Z`` but not ``(1/4)Z``."""
    r = _inv_sqrt2()
    psi = StepFunction.from_pieces([
        (Fraction(-1, 8), Fraction(-1, 16), 1),
        (Fraction(21, 64), Fraction(1, 2), 1),
        (Fraction(1, 2), Fraction(5, 8), r),
        (1, Fraction(5, 4), r),
        (Fraction(5, 2), Fraction(21, 8), r),
        (5, Fraction(21, 4), -r),
    ])
    return GeneratorSet.single(psi, 2)


def indicator(lo, hi, dilation) -> GeneratorSet:
    """``χ[lo, hi)`` as a single generator."""
    return GeneratorSet.single(StepFunction.indicator(lo, hi), dilation)


BUILTINS: t.Dict[str, t.Callable[[], GeneratorSet]] = {
    "fig1": fig1,
    "shannon": shannon,
    "class-one": class_one,
}


def builtin(name: str) -> GeneratorSet:
    """Look up a named generator set.

    :raises KeyError: unknown name
    """
    try:
        factory = BUILTINS[name]
    except KeyError:
        raise KeyError("Unknown built-in generator {0!r}, choose from {1}".format(name, sorted(BUILTINS)))
    return factory()


def reduced_dilation(p: int, q: int) -> Fraction:
    """``p/q`` after checking that it is reduced and expansive."""
    if q < 1 or math.gcd(p, q) != 1 or p <= q:
        raise BadDilation("Need coprime p > q >= 1, got p={0} q={1}".format(p, q))
    return Fraction(p, q)
