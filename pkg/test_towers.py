#!/usr/bin/env python3
"""
Tower model tests: genus formulas, step profiles, find_step and the lemma suite.
"""

import math

import pytest

import towers.selfcheck as selfcheck_module
from errors import BelowThresholdError, InvalidStepError, RangeError, StepNotFoundError
from fields import prime_power
from towers import (
    Family, TowerId, delta_genus_lower, families_for, find_step, gs_genus, gs_step_profile,
    kummer_genus, kummer_step_profile, make_tower, previous_profile, profile_at, run_selfcheck,
    step_usable, unusable_reason,
)
from towers.profiles import kummer_D, profiles_up_to
from towers.step_finder import CONDITION_2, NO_PLACE, SMALL_GENUS


def tower(family: Family, q: int) -> TowerId:
    return TowerId(family, prime_power(q))


T4 = tower(Family.T4, 2)


@pytest.mark.parametrize("q,k,expected", [(4, 1, 0), (4, 2, 6), (4, 3, 57), (4, 4, 261), (2, 1, 0), (3, 3, 22)])
def test_gs_genus(q, k, expected):
    assert gs_genus(q, k) == expected


@pytest.mark.parametrize("k,expected", [(0, 0), (1, 1), (2, 3), (3, 9), (4, 21), (5, 49)])
def test_kummer_genus(k, expected):
    assert kummer_genus(k) == expected


def test_genus_levels_start_where_the_towers_do():
    with pytest.raises(InvalidStepError):
        gs_genus(4, 0)
    with pytest.raises(InvalidStepError):
        kummer_genus(-1)


def test_family_validity():
    assert families_for(prime_power(2)) == [T4]
    assert [t.family for t in families_for(prime_power(16))] == [Family.T2, Family.T3]
    assert [t.family for t in families_for(prime_power(9))] == [Family.T3, Family.KQ]
    assert [t.family for t in families_for(prime_power(7))] == [Family.T3, Family.KB]
    assert [t.family for t in families_for(prime_power(4))] == [Family.T3]
    assert [t.family for t in families_for(prime_power(3))] == [Family.KB]
    for family, q in [(Family.T4, 4), (Family.KB, 9), (Family.T2, 9), (Family.T3, 5), (Family.KQ, 4)]:
        with pytest.raises(RangeError):
            tower(family, q)


def test_make_tower_by_name():
    assert make_tower("GS-AS-binary", prime_power(2)) == T4


def test_binary_small_exact_genera():
    assert gs_step_profile(T4, 1, 1).genus_exact == 2
    assert gs_step_profile(T4, 2, 1).genus_exact == 23
    assert gs_step_profile(T4, 3, 0).genus_exact == 57


def test_quadratic_tower_step_profile():
    profile = gs_step_profile(tower(Family.T2, 16), 2, 0)
    assert profile.weighted_places_lower == 60
    assert profile.genus_exact == 6
    # alpha_16 = -1
    assert profile.n0_lower == 27


def test_binary_D_values():
    assert [gs_step_profile(T4, k, s).D for k, s in [(1, 0), (1, 1), (2, 0), (2, 1), (3, 0)]] == [3, 6, 12, 24, 48]


def test_step_s_equal_r_is_the_next_level():
    assert gs_step_profile(T4, 1, 2) == gs_step_profile(T4, 2, 0)


@pytest.mark.parametrize("k,s", [(0, 0), (1, -1), (1, 3)])
def test_invalid_steps(k, s):
    with pytest.raises(InvalidStepError):
        gs_step_profile(T4, k, s)


def test_kummer_profiles():
    kb3 = tower(Family.KB, 3)
    assert kummer_step_profile(kb3, 2).weighted_places_lower == 16
    p5 = kummer_step_profile(tower(Family.KB, 5), 0)
    assert (p5.weighted_places_lower, p5.genus_exact) == (8, 0)
    p3 = kummer_step_profile(kb3, 3)
    assert p3.D == 12
    assert delta_genus_lower(kb3, (3, None)) == 12
    with pytest.raises(InvalidStepError):
        kummer_step_profile(T4, 1)


@pytest.mark.parametrize("k", range(0, 31))
def test_kummer_jump_covers_D(k):
    assert kummer_genus(k + 1) - kummer_genus(k) >= kummer_D(k)


@pytest.mark.parametrize("family,q", [(Family.T2, 16), (Family.T2, 25), (Family.T3, 7), (Family.T3, 4),
                                      (Family.T4, 2), (Family.KB, 5), (Family.KQ, 9)])
def test_profile_invariants(family, q):
    t = tower(family, q)
    for profile in profiles_up_to(t, 6):
        assert profile.genus_lower <= profile.genus_upper
        if profile.genus_exact is not None:
            assert profile.genus_lower <= profile.genus_exact <= profile.genus_upper
        assert profile.weighted_places_lower >= 2 * profile.n0_lower + profile.genus_upper + t.alpha
        assert profile.weighted_places_lower >= profile.D


# --- find_step ---

def test_binary_threshold():
    with pytest.raises(BelowThresholdError):
        find_step(T4, 11)


def test_base_threshold_for_q4():
    with pytest.raises(BelowThresholdError):
        find_step(tower(Family.T3, 4), 9)
    assert find_step(tower(Family.T3, 4), 10)


def test_kummer_base_p5_skips_small_genus():
    profile = find_step(tower(Family.KB, 5), 5)
    assert profile.k >= 2
    assert profile.genus_lower >= 2
    # L_1 already carries enough places; only its genus rules it out
    before = previous_profile(profile)
    assert before.satisfies_condition_2(5)
    assert unusable_reason(before, 5) == SMALL_GENUS


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_kummer_base_minimality(p):
    t = tower(Family.KB, p)
    first = math.ceil(t.threshold)
    for n in range(first, first + 60):
        profile = find_step(t, n)
        assert unusable_reason(profile, n) is None
        before = previous_profile(profile)
        if before is None:
            continue
        assert unusable_reason(before, n) in (CONDITION_2, SMALL_GENUS, NO_PLACE), (p, n)


def test_selfcheck_names_the_failing_clause():
    report = run_selfcheck(2, 0)
    details = [c.detail for c in report.checks if c.lemma == "find_step minimality" and c.tower.startswith("Kummer-base")]
    assert details
    assert any(SMALL_GENUS in d for d in details)



def test_quadratic_tower_n13():
    t = tower(Family.T2, 16)
    profile = find_step(t, 13)
    assert profile.n0_lower >= 13
    before = previous_profile(profile)
    assert before is None or not step_usable(before, 13)


def test_level_cap():
    with pytest.raises(StepNotFoundError):
        find_step(T4, 10 ** 6, level_cap=2)


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9, 16, 25, 49])
def test_find_step_is_the_first_usable_step(q):
    for t in families_for(prime_power(q)):
        n = int(t.threshold) + 1
        for _ in range(12):
            profile = find_step(t, n)
            assert step_usable(profile, n)
            before = previous_profile(profile)
            assert before is None or not step_usable(before, n)
            n = n * 2 + 1


def test_binary_tower_for_every_n_up_to_5000():
    for n in range(12, 5001):
        profile = find_step(T4, n)
        assert profile.satisfies_condition_2(n)
        before = previous_profile(profile)
        assert before is None or not before.satisfies_condition_2(n)


def test_profile_at_round_trip():
    profile = find_step(T4, 40)
    assert profile_at(T4, profile.step) == profile


# --- lemma suite ---

def test_selfcheck_passes():
    report = run_selfcheck(8, 30)
    assert report.passed, report.failures[:5]
    summary = report.summary()
    assert int(summary["violations"].sum()) == 0
    assert "Kummer genus jump >= D" in set(summary["lemma"])


def test_selfcheck_vacuous_at_level_0():
    report = run_selfcheck(0)
    assert report.passed
    assert report.checks == []


def test_selfcheck_report_csv(tmp_path):
    report = run_selfcheck(3, 5)
    path = tmp_path / "audit.csv"
    report.write_csv(str(path))
    header = path.read_text().splitlines()[0]
    assert header == "tower,k,s,genus_lower,genus_upper,places_lower,D,n0_lower"


def test_selfcheck_catches_a_broken_genus_formula(monkeypatch):
    monkeypatch.setattr(selfcheck_module, "gs_genus", lambda q, k: 0)
    report = run_selfcheck(4, 0)
    assert not report.passed
    assert any(c.lemma == "genus growth g_k > q^k" for c in report.failures)


def test_base_tower_over_f4_uses_the_general_D():
    t = tower(Family.T3, 4)
    for profile in profiles_up_to(t, 6):
        assert profile.D == 2 ** profile.s * 4 ** profile.k
        assert profile.weighted_places_lower >= profile.D
        if profile.k >= 4:
            assert delta_genus_lower(t, profile.step) >= profile.D


def test_selfcheck_covers_lemma_iv_at_intermediate_steps():
    report = run_selfcheck(5, 0)
    iv = [c for c in report.checks if c.lemma == "genus upper bound iv" and c.s == 1]
    labels = {c.tower for c in iv}
    assert Family.T2.value + "/F_16" in labels
    assert Family.T3.value + "/F_4" in labels
    assert Family.T3.value + "/F_9" in labels
    assert all(c.passed for c in iv)
    assert any(c.lemma == "GS genus jump >= D" and c.tower == Family.T3.value + "/F_4" for c in report.checks)
