"""
find_step: the first tower step that can carry an F_{q^n} multiplication.
"""

import logging
from typing import Optional

import config
from bilinear.general_cc import has_place_of_degree
from errors import BelowThresholdError, StepNotFoundError
from towers.ids import TowerId
from towers.profiles import (
    Step, TowerStepProfile, first_step, next_step, previous_step, profile_at,
)

logger = logging.getLogger(__name__)


CONDITION_2 = "condition (2) fails"
SMALL_GENUS = "genus below 2"
NO_PLACE = "no degree-n place"


def unusable_reason(profile: TowerStepProfile, n: int) -> Optional[str]:
    """First clause of step_usable that fails, or None when the step is usable."""
    if not profile.satisfies_condition_2(n):
        return CONDITION_2
    if profile.genus_lower < 2:
        return SMALL_GENUS
    if not has_place_of_degree(profile.tower.q.q, profile.genus_upper, n):
        return NO_PLACE
    return None


def step_usable(profile: TowerStepProfile, n: int) -> bool:
    """
    Enough weighted places (Condition (2)), genus at least 2, and a degree-n place.

    The genus clause is part of usability, so the step before the one
    find_step returns may satisfy Condition (2) on its own: for small n
    Kummer-base towers skip their genus 0 and genus 1 levels this way.
    """
    return unusable_reason(profile, n) is None


def find_step(tower: TowerId, n: int, level_cap: Optional[int] = None) -> TowerStepProfile:
    """
    First step (in walk order) that is step_usable for n.

    Every earlier step fails at least one clause of step_usable; see
    unusable_reason.
    """
    if not tower.admits(n):
        raise BelowThresholdError(
            f"{tower.label} needs n >= {tower.threshold}, got n={n}")
    cap = config.LEVEL_CAP if level_cap is None else level_cap

    step: Step = first_step(tower)
    while step[0] <= cap:
        profile = profile_at(tower, step)
        if step_usable(profile, n):
            logger.debug(f"🔍 {tower.label} n={n}: using {profile.label}")
            return profile
        step = next_step(tower, step)
    raise StepNotFoundError(f"{tower.label}: no usable step for n={n} up to level {cap}")


def previous_profile(profile: TowerStepProfile) -> Optional[TowerStepProfile]:
    step = previous_step(profile.tower, profile.step)
    return None if step is None else profile_at(profile.tower, step)
