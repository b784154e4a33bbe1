"""Translational averaging of the frame functional over approximate transversal constellations.

The average of ``N(T_d f, Z)`` over a constellation ``K`` equals ``Σ c_j(m)·E_K(a^j m)`` over all ``m ∈ Z``, where ``E_K`` is the exponential sum average of :py:func:`oversampling.system.approx.exp_sum_average`. As ``ε → 0`` and ``J → ∞`` it tends to ``N(f, (1/λ)Z)``.
"""
# Standard Library
import logging
import math
import typing as t
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction

# Oversampling
from oversampling.system import DEFAULT_SETTINGS
from oversampling.system import Settings
from oversampling.system.approx import exp_sum_average
from oversampling.system.approx import multiscale_constellation
from oversampling.system.conditions import DilationSpec
from oversampling.system.exactnum.quadratic import QuadScalar
from oversampling.system.frames.functional import coefficient_table
from oversampling.system.frames.generators import GeneratorSet
from oversampling.system.frames.stepfunction import StepFunction
from oversampling.system.lattice import Lattice


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AveragingRow:
    j: int
    epsilon: float
    size: int
    average: complex
    error: float
    bound: float
    warnings: t.Tuple[str, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class AveragingTable:
    """Convergence table of the averaged functional towards ``N(f, (1/λ)Z)``."""

    target: QuadScalar
    norm2: QuadScalar
    rows: t.Tuple[AveragingRow, ...]

    @property
    def errors(self) -> t.List[float]:
        return [row.error for row in self.rows]


def _row_bound(table, a: Fraction, j_max: int, eps: float) -> float:
    bound = 0.0
    for (_, j, m), value in table.items():
        size = math.sqrt(float(value.abs2()))
        if abs(j) <= j_max:
            bound += size * min(2 * math.pi * abs(float(a ** j * m)) * eps, 2.0)
        else:
            bound += 2 * size
    return bound


def averaging_experiment(f: StepFunction, psis: GeneratorSet, lam: int, j_schedule: t.Sequence[int],
                         eps_schedule: t.Sequence, settings: Settings = DEFAULT_SETTINGS) -> AveragingTable:
    """Average the functional over constellations for each ``(J, ε)`` pair of the schedules.

    Each row reports the distance of the average to ``N(f, (1/λ)Z)`` and the bound obtained from the coefficient sizes: ``|c|·min(2π|a^j m|ε, 2)`` for ``|j| <= J`` and ``2|c|`` beyond.
    """
    if len(j_schedule) != len(eps_schedule):
        raise ValueError("Schedules must have the same length")
    a = psis.dilation
    full = coefficient_table(f, psis, 1)
    target = QuadScalar(0, 0, psis.radicand)
    for (_, _, m), value in sorted(full.items()):
        if m.numerator % lam == 0:
            target = target + value.re
    norm2 = f.abs2().integrate().re
    exact_target = complex(float(target), 0)

    dilation = DilationSpec.scalar(a, settings=settings)
    lattice = Lattice.scaled(Fraction(1, lam))
    rows = []
    for j_max, eps in zip(j_schedule, eps_schedule):
        constellation = multiscale_constellation(dilation, lattice, j_max, eps, settings)
        average = 0j
        for (_, j, m), value in sorted(full.items()):
            average += complex(value) * exp_sum_average(constellation, (a ** j * m,))
        row = AveragingRow(
            j=j_max,
            epsilon=float(eps),
            size=len(constellation),
            average=average,
            error=abs(average - exact_target),
            bound=_row_bound(full, a, j_max, float(eps)),
            warnings=constellation.warnings,
        )
        logger.info("J=%d eps=%g |K|=%d error=%.3e bound=%.3e", row.j, row.epsilon, row.size, row.error, row.bound)
        rows.append(row)
    return AveragingTable(target=target, norm2=norm2, rows=tuple(rows))
