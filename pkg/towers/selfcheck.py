"""
Numeric lemma suite for the tower models.

Every check is an instance of a published inequality evaluated on the exact
genus formulas and certified profile bounds. A failure means the models are
wrong, not the mathematics, so the CLI exits non-zero on any violation.
"""

import logging
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

import pandas as pd

from constants.arithmetic import gamma
from constants.registry import KnownValues, default_table
from errors import MuRankError
from fields.prime_power import make_prime_power, prime_power
from towers.genus import gs_genus, kummer_genus
from towers.ids import Family, TowerId, families_for
from towers.profiles import (
    delta_genus_lower, kummer_D, previous_step, profile_at, profiles_up_to,
)
from towers.step_finder import find_step, unusable_reason

logger = logging.getLogger(__name__)

GS_FIELD_SIZES = (4, 5, 7, 8, 9, 16, 25)
KUMMER_PRIMES = (3, 5, 7, 11, 13)

# (target q, n) pairs sampled for the find_step minimality check
MINIMALITY_SAMPLE = ((2, 12), (2, 40), (2, 500), (3, 11), (3, 60), (4, 10), (4, 77),
                     (5, 5), (5, 6), (7, 7), (7, 9), (9, 8), (11, 11), (13, 14), (16, 13), (25, 300))

REPORT_COLUMNS = ["tower", "k", "s", "genus_lower", "genus_upper", "places_lower", "D", "n0_lower"]


@dataclass
class LemmaCheck:
    lemma: str
    tower: str
    k: int
    s: Optional[int]
    passed: bool
    detail: str = ""


@dataclass
class SelfcheckReport:
    k_max: int
    kummer_k_max: int
    checks: List[LemmaCheck] = field(default_factory=list)
    profile_rows: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[LemmaCheck]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> pd.DataFrame:
        """One row per lemma: number of instances checked and violations."""
        if not self.checks:
            return pd.DataFrame(columns=["lemma", "checked", "violations"])
        df = pd.DataFrame([asdict(c) for c in self.checks])
        grouped = df.groupby("lemma", sort=False)["passed"]
        return pd.DataFrame({
            "checked": grouped.size(),
            "violations": grouped.apply(lambda s: int((~s).sum())),
        }).reset_index()

    def profiles_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.profile_rows, columns=REPORT_COLUMNS)

    def write_csv(self, path: str) -> None:
        self.profiles_frame().to_csv(path, index=False, lineterminator="\n")


def at_least_sqrt(x: Fraction, m: int) -> bool:
    """x >= sqrt(m) without leaving exact arithmetic."""
    return x >= 0 and x * x >= m


# --- GS families ---

def _gs_tower(q_t: int) -> TowerId:
    base = prime_power(q_t)
    return TowerId(Family.T2, make_prime_power(base.p, 2 * base.r))


def _check_gs_levels(report: SelfcheckReport, q_t: int, k_max: int) -> None:
    label = f"GS q={q_t}"
    for k in range(1, k_max + 1):
        g = gs_genus(q_t, k)
        if k >= 4:
            report.checks.append(LemmaCheck("genus growth g_k > q^k", label, k, 0, g > q_t ** k, f"g={g}"))
        # g_k <= q^(k-1)(q+1) - sqrt(q) q^(k/2), squared
        rest = q_t ** (k - 1) * (q_t + 1) - g
        report.checks.append(LemmaCheck(
            "genus upper bound ii", label, k, 0, rest >= 0 and rest * rest >= q_t ** (k + 1), f"g={g}"))
        if k >= 2:
            # s = 0 instance of part iv: q g_k <= q^k(q+1) - q^(k/2)(q-1)
            rest = q_t ** k * (q_t + 1) - q_t * g
            report.checks.append(LemmaCheck(
                "genus upper bound iv", label, k, 0,
                rest >= 0 and rest * rest >= (q_t - 1) ** 2 * q_t ** k, f"g={g}"))


def _check_gs_steps(report: SelfcheckReport, tower: TowerId, k_max: int, table: KnownValues) -> None:
    q_t, p = tower.tower_q, tower.p
    lam = Fraction(1)
    if tower.family == Family.T4:
        lam = Fraction(tower.d) * gamma(tower.q, tower.d, table) / table.mu_sym_upper(tower.q, tower.d).value

    for profile in profiles_up_to(tower, k_max):
        k, s = profile.k, profile.s
        report.profile_rows.append(_row(profile))
        x = q_t ** (k - 1) * p ** s
        report.checks.append(LemmaCheck(
            "places cover D", tower.label, k, s, profile.weighted_places_lower >= profile.D))
        report.checks.append(LemmaCheck(
            "genus sandwich", tower.label, k, s, profile.genus_lower <= profile.genus_upper,
            f"[{profile.genus_lower}, {profile.genus_upper}]"))
        report.checks.append(LemmaCheck(
            "genus upper bound iii", tower.label, k, s, profile.genus_upper <= x * (q_t + 1)))
        if k >= 2 and s >= 1:
            # p^(r-s) g_(k,s) <= q^k(q+1) - q^(k/2)(q-1), squared, at the exact genus or the lower bound
            g = profile.genus_exact if profile.genus_exact is not None else profile.genus_lower
            rest = q_t ** k * (q_t + 1) - p ** (tower.r - s) * g
            report.checks.append(LemmaCheck(
                "genus upper bound iv", tower.label, k, s,
                rest >= 0 and rest * rest >= (q_t - 1) ** 2 * q_t ** k, f"g>={g}"))

        if tower.family == Family.T4:
            if k >= 3:
                g = gs_genus(q_t, k)
                report.checks.append(LemmaCheck("T4 genus growth g_k > p q^(k-1)", tower.label, k, s,
                                                g > p * q_t ** (k - 1), f"g={g}"))
            delta = delta_genus_lower(tower, profile.step)
            report.checks.append(LemmaCheck("T4 genus jump >= lambda D", tower.label, k, s,
                                            delta >= lam * profile.D, f"dg>={delta}, D={profile.D}"))
            # (W - g - 5)/2 >= 5 p^s q^(k-1) - 5/2, before flooring
            slack = profile.weighted_places_lower - profile.genus_upper - tower.alpha
            report.checks.append(LemmaCheck("T4 n0 lower bound", tower.label, k, s, slack >= 10 * x - 5))
        else:
            if k >= 4:
                delta = delta_genus_lower(tower, profile.step)
                report.checks.append(LemmaCheck("GS genus jump >= D", tower.label, k, s,
                                                delta >= profile.D, f"dg>={delta}, D={profile.D}"))
            # (W - g + 1)/2 >= ((q+1) q^(k-1) p^s (q-2) + 1)/2, before flooring
            slack = profile.weighted_places_lower - profile.genus_upper + 1
            report.checks.append(LemmaCheck("GS n0 lower bound", tower.label, k, s,
                                            slack >= (q_t + 1) * x * (q_t - 2) + 1))


# --- Kummer families ---

def _check_kummer(report: SelfcheckReport, p: int, k_max: int) -> None:
    tower = TowerId(Family.KB, prime_power(p))
    small = p in (3, 5)
    for k in range(0, k_max + 1):
        g = kummer_genus(k)
        profile = profile_at(tower, (k, None))
        report.profile_rows.append(_row(profile))
        two = 2 ** (k + 1)
        report.checks.append(LemmaCheck(
            "Kummer genus bound i", tower.label, k, None, at_least_sqrt(Fraction(two + 1 - g, 2), two), f"g={g}"))
        report.checks.append(LemmaCheck("Kummer genus bound ii", tower.label, k, None, g <= two))
        delta = kummer_genus(k + 1) - g
        report.checks.append(LemmaCheck(
            "Kummer genus jump >= D", tower.label, k, None, delta >= kummer_D(k), f"dg={delta}"))
        report.checks.append(LemmaCheck(
            "Kummer places cover genus jump", tower.label, k, None, profile.weighted_places_lower >= delta))
        # (N - g - alpha)/2 >= 2^k (p-2) + 2^((k+1)/2), less 3/2 when alpha = 2
        half = Fraction(profile.weighted_places_lower - g - tower.alpha, 2)
        excess = half - 2 ** k * (p - 2) + (Fraction(3, 2) if small else 0)
        report.checks.append(LemmaCheck(
            "Kummer n0 lower bound", tower.label, k, None, at_least_sqrt(excess, two)))


def _check_minimality(report: SelfcheckReport) -> None:
    """find_step returns a usable step and the step before it fails a named clause."""
    for q_value, n in MINIMALITY_SAMPLE:
        for tower in families_for(prime_power(q_value)):
            if not tower.admits(n):
                continue
            try:
                found = find_step(tower, n)
            except MuRankError as exc:
                report.checks.append(LemmaCheck("find_step minimality", tower.label, -1, None, False, str(exc)))
                continue
            own = unusable_reason(found, n)
            report.checks.append(LemmaCheck("find_step returns a usable step", tower.label, found.k, found.s,
                                            own is None, f"n={n}" if own is None else f"n={n}: {own}"))
            before = previous_step(tower, found.step)
            reason = None if before is None else unusable_reason(profile_at(tower, before), n)
            ok = before is None or reason is not None
            detail = f"n={n}; first step" if before is None else f"n={n}; previous step: {reason or 'usable'}"
            report.checks.append(LemmaCheck("find_step minimality", tower.label, found.k, found.s, ok, detail))



def _row(profile) -> Dict[str, Any]:
    return {
        "tower": profile.tower.label,
        "k": profile.k,
        "s": "" if profile.s is None else profile.s,
        "genus_lower": profile.genus_lower,
        "genus_upper": profile.genus_upper,
        "places_lower": profile.weighted_places_lower,
        "D": profile.D,
        "n0_lower": profile.n0_lower,
    }


def run_selfcheck(k_max: int, kummer_k_max: Optional[int] = None,
                  table: Optional[KnownValues] = None) -> SelfcheckReport:
    kummer_k_max = k_max if kummer_k_max is None else kummer_k_max
    table = table or default_table()
    report = SelfcheckReport(k_max=k_max, kummer_k_max=kummer_k_max)

    if k_max >= 1:
        for q_t in GS_FIELD_SIZES:
            _check_gs_levels(report, q_t, k_max)
            _check_gs_steps(report, _gs_tower(q_t), k_max, table)
            if q_t == 4 or q_t > 5:
                _check_gs_steps(report, TowerId(Family.T3, prime_power(q_t)), k_max, table)
        _check_gs_steps(report, TowerId(Family.T4, prime_power(2)), k_max, table)
        _check_minimality(report)
    if kummer_k_max >= 1:
        for p in KUMMER_PRIMES:
            _check_kummer(report, p, kummer_k_max)

    if report.passed:
        logger.info(f"✅ Selfcheck passed: {len(report.checks)} lemma instances")
    else:
        logger.error(f"❌ Selfcheck found {len(report.failures)} violations")
    return report


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO)
    result = run_selfcheck(4)
    print(result.summary().to_string(index=False))
    print("PASS" if result.passed else "FAIL")
