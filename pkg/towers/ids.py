"""
Tower families and their per-target parameters.

Five families are modelled, each tied to the target field F_q of the bound:

  T2   GS Artin-Schreier tower over F_{q_t^2}      target q = q_t^2, q_t >= 4
  T3   its descent to F_q                          target q > 5 or q = 4
  T4   the q_t = 4 tower descended to F_2          target q = 2
  KQ   Kummer tower y^2 = (x^2+1)/2x over F_{p^2}  target q = p^2, p odd
  KB   the same tower over F_p                     target q = p, p odd
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Tuple

from constants.arithmetic import alpha, epsilon
from errors import RangeError
from fields.prime_power import PrimePower


class Family(str, Enum):
    T2 = "GS-AS-quadratic"
    T3 = "GS-AS-base"
    T4 = "GS-AS-binary"
    KQ = "Kummer-quadratic"
    KB = "Kummer-base"

    @property
    def is_kummer(self) -> bool:
        return self in (Family.KQ, Family.KB)


_DEGREE_SETS = {
    Family.T2: (1,),
    Family.T3: (1, 2),
    Family.T4: (1, 2, 4),
    Family.KQ: (1,),
    Family.KB: (1, 2),
}


@dataclass(frozen=True)
class TowerId:
    family: Family
    q: PrimePower  # target field of the bound

    def __post_init__(self):
        reason = _invalid_reason(self.family, self.q)
        if reason:
            raise RangeError(f"{self.family.value} is not defined for q={self.q.q}: {reason}")

    # --- tower parameters ---

    @property
    def tower_q(self) -> int:
        """q of the tower equations (GS), or the odd prime p (Kummer)."""
        if self.family == Family.T2:
            return self.q.sqrt.q
        if self.family == Family.T3:
            return self.q.q
        if self.family == Family.T4:
            return 4
        return self.q.p

    @property
    def p(self) -> int:
        return 2 if self.family == Family.T4 else self.q.p

    @property
    def r(self) -> int:
        """Exponent with tower_q = p^r (GS only); intermediate steps s run over 0..r-1."""
        if self.family == Family.T4:
            return 2
        if self.family == Family.T2:
            return self.q.r // 2
        if self.family == Family.T3:
            return self.q.r
        return 1

    @property
    def d(self) -> int:
        return max(_DEGREE_SETS[self.family])

    @property
    def degree_set(self) -> Tuple[int, ...]:
        return _DEGREE_SETS[self.family]

    @property
    def alpha(self) -> int:
        return alpha(self.q)

    @property
    def threshold(self) -> Fraction:
        """Least admissible n is the ceiling of this value."""
        q = self.q.q
        if self.family in (Family.T2, Family.KQ):
            return Fraction(q + 1 + epsilon(self.q), 2)
        if self.family == Family.T3:
            return Fraction(10) if q == 4 else Fraction(q + 1 + epsilon(self.q), 2)
        if self.family == Family.T4:
            return Fraction(12)
        if q == 3:
            return Fraction(11)
        return Fraction(q + 1 + epsilon(self.q), 2)

    def admits(self, n: int) -> bool:
        return n >= self.threshold

    @property
    def label(self) -> str:
        return f"{self.family.value}/F_{self.q.q}"

    def __str__(self) -> str:
        return self.label


def _invalid_reason(family: Family, q: PrimePower) -> str:
    n = q.q
    if family == Family.T2:
        if q.r % 2 or q.sqrt.q < 4:
            return "needs q = q_t^2 with q_t >= 4"
    elif family == Family.T3:
        if not (n > 5 or n == 4):
            return "needs q > 5 or q = 4"
    elif family == Family.T4:
        if n != 2:
            return "only defined for q = 2"
    elif family == Family.KQ:
        if q.p == 2 or q.r != 2:
            return "needs q = p^2 with p odd"
    elif family == Family.KB:
        if q.p == 2 or q.r != 1:
            return "needs q = p with p odd"
    return ""


def make_tower(family, q: PrimePower) -> TowerId:
    return TowerId(Family(family), q)


def families_for(q: PrimePower) -> List[TowerId]:
    """Every tower family valid for the target q, in enum order."""
    return [TowerId(f, q) for f in Family if not _invalid_reason(f, q)]
