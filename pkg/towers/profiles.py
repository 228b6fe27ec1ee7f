"""
Certified numeric invariants of single tower steps.

GS steps are indexed by (k, s) with k >= 1 and 0 <= s < r; (k, r) is the
same field as (k+1, 0) and is canonicalised to it. Kummer steps are L_k,
k >= 0, with s absent.
"""

import logging
from dataclasses import asdict, dataclass
from functools import lru_cache
from math import isqrt
from typing import Any, Dict, List, Optional, Tuple

from errors import InvalidStepError
from towers.genus import SMALL_EXACT_GENERA, gs_genus, kummer_genus
from towers.ids import Family, TowerId

logger = logging.getLogger(__name__)

Step = Tuple[int, Optional[int]]


@dataclass(frozen=True)
class TowerStepProfile:
    tower: TowerId
    k: int
    s: Optional[int]
    genus_exact: Optional[int]
    genus_upper: int
    genus_lower: int
    weighted_places_lower: int
    degree_set: Tuple[int, ...]
    D: int
    n0_lower: int

    @property
    def step(self) -> Step:
        return (self.k, self.s)

    @property
    def label(self) -> str:
        if self.s is None:
            return f"L_{self.k}"
        return f"F_({self.k},{self.s})"

    def satisfies_condition_2(self, n: int) -> bool:
        """weighted places >= 2n + g + alpha, with g taken at its upper bound."""
        return self.weighted_places_lower >= 2 * n + self.genus_upper + self.tower.alpha

    def to_row(self) -> Dict[str, Any]:
        row = asdict(self)
        row["tower"] = self.tower.label
        row["degree_set"] = "|".join(str(d) for d in self.degree_set)
        return row


def n0_from(weighted: int, genus_upper: int, alpha_q: int) -> int:
    """sup{m : weighted >= 2m + g + alpha}, computed from the certified bounds."""
    return (weighted - genus_upper - alpha_q) // 2


# --- GS families ---

def _gs_check(tower: TowerId, k: int, s: int) -> Tuple[int, int]:
    if tower.family.is_kummer:
        raise InvalidStepError(f"{tower.label} has no (k, s) steps")
    if k < 1 or s < 0 or s > tower.r:
        raise InvalidStepError(f"step ({k},{s}) outside k >= 1, 0 <= s <= {tower.r}")
    if s == tower.r:
        return k + 1, 0
    return k, s


def gs_exact_genus(tower: TowerId, k: int, s: int) -> Optional[int]:
    k, s = _gs_check(tower, k, s)
    if s == 0:
        return gs_genus(tower.tower_q, k)
    return SMALL_EXACT_GENERA.get(tower.tower_q, {}).get((k, s))


def gs_genus_bounds(tower: TowerId, k: int, s: int) -> Tuple[int, int, Optional[int]]:
    """(lower, upper, exact) genus of F_(k,s)."""
    k, s = _gs_check(tower, k, s)
    q, p, r = tower.tower_q, tower.p, tower.r
    exact = gs_exact_genus(tower, k, s)
    if exact is not None:
        return exact, exact, exact

    shrink = p ** (r - s)
    candidates = [
        gs_genus(q, k + 1) // shrink + 1,        # subfield sandwich
        q ** (k - 1) * (q + 1) * p ** s,          # lemma iii
    ]
    if k >= 2:
        # q^(k/2) rounded down keeps this an upper bound for odd k and non-square q
        candidates.append((q ** k * (q + 1) - isqrt(q ** k) * (q - 1)) // shrink)
    upper = min(candidates)
    lower = max((gs_genus(q, k) - 1) * p ** s + 1, 0)
    return lower, upper, None


def gs_weighted_places(tower: TowerId, k: int, s: int) -> int:
    q, p = tower.tower_q, tower.p
    return (q * q - 1) * q ** (k - 1) * p ** s


def gs_D(tower: TowerId, k: int, s: int) -> int:
    q, p = tower.tower_q, tower.p
    if tower.family == Family.T4:
        # (3/2) p^(s+1) q^(k-1) with p = 2
        return 3 * 2 ** s * 4 ** (k - 1)
    # T3 over F_4 keeps q^k as well, not q^(k-1); places >= D and genus jump >= D
    # are premises of every certificate and selfcheck audits both for T3
    return (p - 1) * p ** s * q ** k


@lru_cache(maxsize=4096)
def gs_step_profile(tower: TowerId, k: int, s: int) -> TowerStepProfile:
    k, s = _gs_check(tower, k, s)
    lower, upper, exact = gs_genus_bounds(tower, k, s)
    weighted = gs_weighted_places(tower, k, s)
    return TowerStepProfile(
        tower=tower, k=k, s=s,
        genus_exact=exact, genus_upper=upper, genus_lower=lower,
        weighted_places_lower=weighted,
        degree_set=tower.degree_set,
        D=gs_D(tower, k, s),
        n0_lower=n0_from(weighted, upper, tower.alpha),
    )


# --- Kummer families ---

def kummer_D(k: int) -> int:
    """2^(k+1) - 2^ceil((k+1)/2): integer lower bound on the genus jump."""
    return 2 ** (k + 1) - 2 ** ((k + 2) // 2)


@lru_cache(maxsize=4096)
def kummer_step_profile(tower: TowerId, k: int) -> TowerStepProfile:
    if not tower.family.is_kummer:
        raise InvalidStepError(f"{tower.label} is not a Kummer family")
    if k < 0:
        raise InvalidStepError(f"Kummer levels start at k=0, got {k}")
    g = kummer_genus(k)
    weighted = 2 ** (k + 1) * (tower.p - 1)
    return TowerStepProfile(
        tower=tower, k=k, s=None,
        genus_exact=g, genus_upper=g, genus_lower=g,
        weighted_places_lower=weighted,
        degree_set=tower.degree_set,
        D=kummer_D(k),
        n0_lower=n0_from(weighted, g, tower.alpha),
    )


# --- Step order ---

def first_step(tower: TowerId) -> Step:
    return (0, None) if tower.family.is_kummer else (1, 0)


def next_step(tower: TowerId, step: Step) -> Step:
    k, s = step
    if tower.family.is_kummer:
        return (k + 1, None)
    return (k, s + 1) if s + 1 < tower.r else (k + 1, 0)


def previous_step(tower: TowerId, step: Step) -> Optional[Step]:
    k, s = step
    if tower.family.is_kummer:
        return (k - 1, None) if k > 0 else None
    if s > 0:
        return (k, s - 1)
    return (k - 1, tower.r - 1) if k > 1 else None


def profile_at(tower: TowerId, step: Step) -> TowerStepProfile:
    k, s = step
    if tower.family.is_kummer:
        return kummer_step_profile(tower, k)
    return gs_step_profile(tower, k, s)


def delta_genus_lower(tower: TowerId, step: Step) -> int:
    """
    Certified lower bound on g(next step) - g(step).

    Exact when both genera are known; otherwise the better of the Hurwitz
    estimate (p-1) p^s (g_k - 1) and the sandwich difference.
    """
    here = profile_at(tower, step)
    there = profile_at(tower, next_step(tower, step))
    if here.genus_exact is not None and there.genus_exact is not None:
        return there.genus_exact - here.genus_exact
    k, s = step
    hurwitz = (tower.p - 1) * tower.p ** s * (gs_genus(tower.tower_q, k) - 1)
    return max(hurwitz, there.genus_lower - here.genus_upper)


def profiles_up_to(tower: TowerId, k_max: int) -> List[TowerStepProfile]:
    """Every step with level <= k_max, in tower order."""
    out = []
    step = first_step(tower)
    while step[0] <= k_max:
        out.append(profile_at(tower, step))
        step = next_step(tower, step)
    return out
