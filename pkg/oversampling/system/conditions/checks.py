"""Checkers for the oversampling conditions on a lattice Λ ⊃ Zⁿ.

The strong condition asks ``(Σ_j BʲΛ*) ∩ Zⁿ ⊂ Λ*``, the weak one ``BʲZⁿ ∩ Λ* ⊂ BʲΛ*`` for every integer ``j``. The support variants shift the target by a non-negative ``J₀``. All of them quantify over infinitely many ``j``, so the checkers scan a finite range exactly and only claim more through the proven special cases listed in :py:class:`Certificate`.
"""
# Standard Library
import logging
import math
import typing as t
from dataclasses import asdict
from dataclasses import dataclass

# Oversampling
from oversampling.system.conditions.dilation import DilationSpec
from oversampling.system.conditions.verdict import Certificate
from oversampling.system.conditions.verdict import Verdict
from oversampling.system.exactnum import matrix as mx
from oversampling.system.exactnum.rational import lcm
from oversampling.system.exceptions import BadDilation
from oversampling.system.exceptions import DimError
from oversampling.system.exceptions import NotSublattice
from oversampling.system.exceptions import Unsupported
from oversampling.system.lattice import Lattice
from oversampling.system.lattice import dual
from oversampling.system.lattice import exact_transversal
from oversampling.system.lattice import intersect
from oversampling.system.lattice import is_sublattice
from oversampling.system.lattice import lattice_sum


logger = logging.getLogger(__name__)


def _validate(dilation: DilationSpec, lattice: Lattice, expansive: bool = True):
    if not isinstance(dilation, DilationSpec):
        raise Unsupported("Condition checks need an exact DilationSpec, got {0!r}".format(dilation))
    if dilation.n != lattice.dim:
        raise DimError("Dilation of size {0} against lattice of dimension {1}".format(dilation.n, lattice.dim))
    if expansive:
        dilation.require_expansive()
    if not is_sublattice(Lattice.integer(lattice.dim), lattice):
        raise NotSublattice("Oversampling lattice must contain Zⁿ, got {0!r}".format(lattice))


def _first_escape(lattice: Lattice, target: Lattice) -> t.Optional[tuple]:
    """First basis vector of ``lattice`` outside ``target``."""
    for column in lattice.columns:
        if column not in target:
            return column
    return None


def dilated(dilation: DilationSpec, lattice: Lattice, j: int) -> Lattice:
    """``Bʲ·Λ``."""
    if j == 0:
        return lattice
    return lattice.transform(dilation.power_transpose(j))


def scan_strong(dilation: DilationSpec, lattice: Lattice, j_max: int, j0: int = 0) -> t.Tuple[t.Optional[dict], Lattice]:
    """Scan ``J = 0…j_max`` for a point of ``G_J ∩ Zⁿ`` outside ``B^(-J₀)Λ*``.

    :return: ``(witness or None, G ∩ Zⁿ at the last level scanned)``
    """
    n = lattice.dim
    integers = Lattice.integer(n)
    dual_lattice = dual(lattice)
    target = dilated(dilation, dual_lattice, -j0)
    group = dual_lattice
    trace = intersect(group, integers)
    for level in range(0, j_max + 1):
        if level:
            group = lattice_sum(group, dilated(dilation, dual_lattice, level), dilated(dilation, dual_lattice, -level))
        trace = intersect(group, integers)
        escape = _first_escape(trace, target)
        if escape is not None:
            logger.debug("Strong condition fails at J=%d with %s", level, escape)
            return {"m": escape, "J": level}, trace
    return None, trace


def _weak_order(j_max: int) -> t.Iterator[int]:
    yield 0
    for k in range(1, j_max + 1):
        yield -k
        yield k


def scan_weak(dilation: DilationSpec, lattice: Lattice, j_max: int, j0: int = 0) -> t.Optional[dict]:
    """Scan ``j = 0, -1, 1, …, ±j_max`` for a point of ``B^(J₀+j)Zⁿ ∩ Λ*`` outside ``BʲΛ*``."""
    n = lattice.dim
    integers = Lattice.integer(n)
    dual_lattice = dual(lattice)
    for j in _weak_order(j_max):
        left = intersect(dilated(dilation, integers, j0 + j), dual_lattice)
        right = dilated(dilation, dual_lattice, j)
        escape = _first_escape(left, right)
        if escape is not None:
            logger.debug("Weak condition fails at j=%d with %s", j, escape)
            return {"m": escape, "j": j}
    return None


def prop36_holds(dilation: DilationSpec, lattice: Lattice) -> bool:
    """``BZⁿ ∩ Λ* ⊂ BΛ* ⊂ Λ*`` for an integer dilation."""
    dual_lattice = dual(lattice)
    b_dual = dilated(dilation, dual_lattice, 1)
    if not is_sublattice(b_dual, dual_lattice):
        return False
    left = intersect(dilated(dilation, Lattice.integer(lattice.dim), 1), dual_lattice)
    return is_sublattice(left, b_dual)


def _one_dimensional(dilation: DilationSpec, lattice: Lattice) -> t.Optional[t.Tuple[int, int, int]]:
    """``(p, q, λ)`` when ``A = p/q`` and ``Λ = (1/λ)Z``."""
    if dilation.n != 1:
        return None
    a = abs(dilation.matrix[0][0])
    step = lattice.basis[0][0]
    return a.numerator, a.denominator, int(1 / step)


def certificate_1d(p: int, q: int, lam: int) -> bool:
    """Coprimality certificate for ``a = p/q`` and ``Λ = (1/λ)Z``.

    :raises BadDilation: ``p/q`` not reduced or not expansive
    """
    if math.gcd(p, q) != 1 or not p > q >= 1:
        raise BadDilation("Need coprime p > q >= 1, got p={0} q={1}".format(p, q))
    if lam < 1:
        raise BadDilation("λ must be a positive integer, got {0}".format(lam))
    return math.gcd(lam, p * q) == 1


def check_support_strong(dilation: DilationSpec, lattice: Lattice, j0: int, j_max: int) -> Verdict:
    """``(Σ_{|j|<=J} BʲΛ*) ∩ Zⁿ ⊂ B^(-J₀)Λ*`` for ``J = 0…j_max``."""
    _validate(dilation, lattice)
    if j0 < 0:
        raise ValueError("J₀ must be non-negative")
    witness, _ = scan_strong(dilation, lattice, j_max, j0)
    if witness is not None:
        return Verdict.violated(**witness)

    if lattice == Lattice.integer(lattice.dim):
        return Verdict.certified(Certificate.TRIVIAL)
    if dilation.is_integer and prop36_holds(dilation, lattice):
        return Verdict.certified(Certificate.PROP36)
    one_d = _one_dimensional(dilation, lattice)
    if one_d and j0 == 0 and certificate_1d(*one_d):
        return Verdict.certified(Certificate.GCD_1D)
    # For integer a the shifted strong and weak conditions coincide
    if one_d and one_d[1] == 1 and lcm_certificate(one_d[0], one_d[2], j0):
        return Verdict.certified(Certificate.LCM_1D)
    return Verdict.holds_up_to(j_max)


def check_strong(dilation: DilationSpec, lattice: Lattice, j_max: int) -> Verdict:
    """The strong oversampling condition ``(Σ_j BʲΛ*) ∩ Zⁿ ⊂ Λ*``."""
    return check_support_strong(dilation, lattice, 0, j_max)


def lcm_certificate(a: int, lam: int, j0: int) -> bool:
    """``aλ`` divides ``lcm(a^(J₀+1), λ)``."""
    return lcm(a ** (j0 + 1), lam) % (a * lam) == 0


def check_support_weak(dilation: DilationSpec, lattice: Lattice, j0: int, j_max: int) -> Verdict:
    """``B^(J₀+j)Zⁿ ∩ Λ* ⊂ BʲΛ*`` for ``|j| <= j_max``."""
    _validate(dilation, lattice)
    if j0 < 0:
        raise ValueError("J₀ must be non-negative")
    witness = scan_weak(dilation, lattice, j_max, j0)
    if witness is not None:
        return Verdict.violated(**witness)

    if lattice == Lattice.integer(lattice.dim):
        return Verdict.certified(Certificate.TRIVIAL)
    one_d = _one_dimensional(dilation, lattice)
    if one_d and one_d[1] == 1 and lcm_certificate(one_d[0], one_d[2], j0):
        return Verdict.certified(Certificate.LCM_1D)
    if dilation.is_integer and prop36_holds(dilation, lattice):
        return Verdict.certified(Certificate.PROP36)
    return Verdict.holds_up_to(j_max)


def check_weak(dilation: DilationSpec, lattice: Lattice, j_max: int) -> Verdict:
    """The weak oversampling condition ``BʲZⁿ ∩ Λ* ⊂ BʲΛ*``."""
    return check_support_weak(dilation, lattice, 0, j_max)


@dataclass(frozen=True)
class Prop36Report:
    """The six equivalent statements for an integer dilation, evaluated independently.

    Statements quantified over all ``j`` are truncated at ``j_max``.
    """

    #: BZⁿ ∩ Λ* ⊂ BΛ* ⊂ Λ*
    dual_inclusion: bool

    #: BʲZⁿ ∩ Λ* = BʲΛ* for 0 <= j <= j_max
    dual_equality: bool

    #: AΛ ⊂ Λ and A⁻¹Zⁿ ∩ Λ = Zⁿ
    lattice_invariance: bool

    #: BΛ* ⊂ Λ* and Λ* ∖ BΛ* ⊂ Zⁿ ∖ BZⁿ
    complement_inclusion: bool

    #: Weak condition for |j| <= j_max
    weak: bool

    #: Strong condition for J <= j_max
    strong: bool

    @property
    def consistent(self) -> bool:
        """All six statements agree."""
        return len(set(asdict(self).values())) == 1

    def as_dict(self) -> t.Dict[str, bool]:
        return asdict(self)


def _dual_equality(dilation: DilationSpec, lattice: Lattice, j_max: int) -> bool:
    integers = Lattice.integer(lattice.dim)
    dual_lattice = dual(lattice)
    for j in range(0, j_max + 1):
        left = intersect(dilated(dilation, integers, j), dual_lattice)
        if left != dilated(dilation, dual_lattice, j):
            return False
    return True


def _lattice_invariance(dilation: DilationSpec, lattice: Lattice) -> bool:
    integers = Lattice.integer(lattice.dim)
    if not is_sublattice(lattice.transform(dilation.matrix), lattice):
        return False
    return intersect(integers.transform(dilation.power(-1)), lattice) == integers


def _complement_inclusion(dilation: DilationSpec, lattice: Lattice) -> bool:
    dual_lattice = dual(lattice)
    b_dual = dilated(dilation, dual_lattice, 1)
    if not is_sublattice(b_dual, dual_lattice):
        return False
    b_integers = dilated(dilation, Lattice.integer(lattice.dim), 1)
    # Both sides are unions of BΛ*-cosets since BΛ* ⊂ BZⁿ
    for point in exact_transversal(dual_lattice, b_dual):
        if any(point) and point in b_integers:
            return False
    return True


def prop36_battery(dilation: DilationSpec, lattice: Lattice, j_max: int) -> Prop36Report:
    """Evaluate the six equivalent statements for an integer dilation.

    Every statement is computed on its own, so disagreement between them points at a bug in the lattice algebra.

    :raises Unsupported: the dilation has non-integer entries
    """
    _validate(dilation, lattice, expansive=False)
    if not dilation.is_integer:
        raise Unsupported("The equivalence battery needs an integer dilation, got {0!r}".format(dilation))
    strong, _ = scan_strong(dilation, lattice, j_max)
    report = Prop36Report(
        dual_inclusion=prop36_holds(dilation, lattice),
        dual_equality=_dual_equality(dilation, lattice, j_max),
        lattice_invariance=_lattice_invariance(dilation, lattice),
        complement_inclusion=_complement_inclusion(dilation, lattice),
        weak=scan_weak(dilation, lattice, j_max) is None,
        strong=strong is None,
    )
    if not report.consistent:
        logger.warning("Equivalent statements disagree for %r on %r: %s", dilation, lattice, report.as_dict())
    return report


@dataclass(frozen=True)
class ReducedPair:
    """A dilation and oversampling lattice moved to the frame where Γ = Zⁿ."""

    dilation: DilationSpec
    lattice: Lattice
    change_of_basis: mx.RatMatrix


def reduce_general(dilation: DilationSpec, translations: Lattice, lattice: Lattice) -> ReducedPair:
    """Move ``(A, Γ, Λ)`` with ``Γ = PZⁿ`` to ``(P⁻¹AP, P⁻¹Λ)``.

    The reduced lattice contains Zⁿ and the conditions for the general translation lattice hold exactly when they hold for the reduced pair.

    :raises NotSublattice: Γ ⊄ Λ
    """
    if not dilation.n == translations.dim == lattice.dim:
        raise DimError("Dilation, translation and oversampling lattices must share a dimension")
    if not is_sublattice(translations, lattice):
        raise NotSublattice("Translation lattice {0!r} is not inside {1!r}".format(translations, lattice))
    p = translations.basis
    reduced = ReducedPair(
        dilation=dilation.conjugate(p),
        lattice=lattice.transform(mx.inverse(p)),
        change_of_basis=p,
    )
    logger.debug("Reduced %r over %r to %r", dilation, translations, reduced.dilation)
    return reduced


def check_general_strong(dilation: DilationSpec, translations: Lattice, lattice: Lattice, j_max: int) -> Verdict:
    """Strong condition for an arbitrary translation lattice Γ ⊂ Λ.

    Witnesses are reported in the reduced frame.
    """
    reduced = reduce_general(dilation, translations, lattice)
    return check_strong(reduced.dilation, reduced.lattice, j_max)
