"""
The generalized Chudnovsky-Chudnovsky theorem as a numeric combinator.

Nothing here builds a function field: the caller supplies the genus, the
place counts and whether a degree-m place exists, and the combinator checks
the theorem's hypotheses and returns sum n_{d,u} mu_q(d,u).
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Dict, List, Tuple, Union

from constants.arithmetic import e_const
from constants.registry import KnownValues, UsedEntry
from fields.prime_power import PrimePower

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Inapplicable:
    """A route or theorem whose hypotheses fail; reason names the first failure."""
    reason: str

    def __str__(self) -> str:
        return f"Inapplicable: {self.reason}"


@dataclass
class PlaceBudget:
    """n_{d,u} places of degree d used with multiplicity u, against caps B_d."""
    entries: List[Tuple[int, int, int]] = field(default_factory=list)  # (d, u, count)
    degree_caps: Dict[int, int] = field(default_factory=dict)

    def used_per_degree(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for d, _, count in self.entries:
            out[d] = out.get(d, 0) + count
        return out

    def within_caps(self) -> bool:
        used = self.used_per_degree()
        return all(used.get(d, 0) <= cap for d, cap in self.degree_caps.items())

    def weighted_size(self) -> int:
        """sum n_{d,u} * d * u"""
        return sum(d * u * count for d, u, count in self.entries)

    def positive(self) -> List[Tuple[int, int, int]]:
        return [(d, u, c) for d, u, c in self.entries if c > 0]


# --- Degree-n place test ---

def place_rhs_floor(Q: int, n: int) -> int:
    """floor(Q^((n-1)/2) * (sqrt(Q) - 1)) in exact integer arithmetic."""
    s = isqrt(Q)
    if s * s == Q:
        return s ** (n - 1) * (s - 1)
    if (n - 1) % 2 == 0:
        a = Q ** ((n - 1) // 2)
        return isqrt(a * a * Q) - a
    # n even: Q^(n/2) - ceil(sqrt(Q^(n-1))), and Q^(n-1) is not a square here
    return Q ** (n // 2) - (isqrt(Q ** (n - 1)) + 1)


def place_rhs_capped(Q: int, n: int, lhs: int) -> int:
    """
    min(place_rhs_floor, 2^(bits(lhs)+8)).

    The cap exceeds lhs, so lhs <= capped iff lhs <= the exact floor, and
    certificates never carry thousand-digit operands.
    """
    cap = 1 << (lhs.bit_length() + 8)
    # sqrt(Q) - 1 >= 1/4 and Q >= 2, so the rhs is at least 2^((n-1)//2 - 2)
    if (n - 1) // 2 - 2 >= lhs.bit_length() + 8:
        return cap
    return min(place_rhs_floor(Q, n), cap)


def has_place_of_degree(Q: int, g: int, n: int) -> bool:
    """Sufficient condition 2g + 1 <= Q^((n-1)/2)(sqrt(Q) - 1)."""
    lhs = 2 * g + 1
    return lhs <= place_rhs_capped(Q, n, lhs)


def general_cc_bound_with_entries(q: PrimePower, m: int, l: int, g: int, budget: PlaceBudget,
                                  has_degree_m_place: bool,
                                  table: KnownValues) -> Tuple[Union[Fraction, Inapplicable], List[UsedEntry]]:
    if g < 2:
        return Inapplicable(f"genus g={g} < 2"), []
    if not budget.within_caps():
        return Inapplicable("place budget exceeds the available places B_d"), []
    if not (has_degree_m_place or has_place_of_degree(q.q, g, m)):
        return Inapplicable(f"no place of degree {m} is known to exist"), []
    e = e_const(q)
    need = 2 * m * l + 3 * e + g - 1
    have = budget.weighted_size()
    if have < need:
        return Inapplicable(f"sum n_(d,u) d u = {have} < 2ml+3e+g-1 = {need}"), []

    total = 0
    used: List[UsedEntry] = []
    for d, u, count in budget.positive():
        entry = table.mu_upper(q, d, u)
        used.append(entry)
        total += count * entry.value
    return Fraction(total), used


def general_cc_bound(q: PrimePower, m: int, l: int, g: int, budget: PlaceBudget,
                     has_degree_m_place: bool, table: KnownValues) -> Union[Fraction, Inapplicable]:
    return general_cc_bound_with_entries(q, m, l, g, budget, has_degree_m_place, table)[0]
