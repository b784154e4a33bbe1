"""Outcome records of the condition checkers."""
# Standard Library
import enum
import typing as t
from dataclasses import dataclass
from dataclasses import field


class Status(enum.Enum):
    """How a condition was decided."""

    #: Decided exactly over the whole (finite) range that matters
    HOLDS = "Holds"

    #: Holds for every index, by one of the proven special cases
    CERTIFIED_HOLDS = "CertifiedHolds"

    #: No violation up to the truncation bound; nothing is claimed beyond it
    HOLDS_UP_TO = "HoldsUpTo"

    VIOLATED = "Violated"

    INCONCLUSIVE = "Inconclusive"


class Certificate(enum.Enum):
    """Proven special cases that upgrade a bounded check to a certificate."""

    #: Integer dilation with BZⁿ ∩ Λ* ⊂ BΛ* ⊂ Λ*
    PROP36 = "Prop36"

    #: One dimension, a = p/q and Λ = (1/λ)Z with gcd(λ, pq) = 1
    GCD_1D = "Gcd1D"

    #: One dimension, integer a with aλ dividing lcm(a^(J₀+1), λ)
    LCM_1D = "Lcm1D"

    #: Λ = Zⁿ, where both sides coincide
    TRIVIAL = "Trivial"


@dataclass(frozen=True)
class Verdict:
    """Result of a check.

    A violated verdict always carries a witness which can be re-verified independently of the checker that produced it.
    """

    status: Status
    witness: t.Optional[t.Dict[str, t.Any]] = None
    certificate: t.Optional[Certificate] = None
    bound: t.Optional[int] = None
    notes: t.Tuple[str, ...] = field(default_factory=tuple)

    @classmethod
    def holds(cls, **kwargs) -> "Verdict":
        return cls(Status.HOLDS, **kwargs)

    @classmethod
    def certified(cls, certificate: Certificate, **kwargs) -> "Verdict":
        return cls(Status.CERTIFIED_HOLDS, certificate=certificate, **kwargs)

    @classmethod
    def holds_up_to(cls, bound: int, **kwargs) -> "Verdict":
        return cls(Status.HOLDS_UP_TO, bound=bound, **kwargs)

    @classmethod
    def violated(cls, **witness) -> "Verdict":
        return cls(Status.VIOLATED, witness=witness)

    @classmethod
    def inconclusive(cls, note: str) -> "Verdict":
        return cls(Status.INCONCLUSIVE, notes=(note,))

    @property
    def is_violated(self) -> bool:
        return self.status is Status.VIOLATED

    @property
    def is_holding(self) -> bool:
        """Holds outright, certified or up to a bound."""
        return self.status in (Status.HOLDS, Status.CERTIFIED_HOLDS, Status.HOLDS_UP_TO)

    def __bool__(self):
        raise TypeError("Verdict has no truth value; test is_holding or is_violated")
