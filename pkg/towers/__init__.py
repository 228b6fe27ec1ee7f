"""
Tower models: genus formulas, certified step profiles, step search and the
numeric lemma suite for the Garcia-Stichtenoth and Kummer towers.
"""

from .ids import Family, TowerId, families_for, make_tower
from .genus import gs_genus, kummer_genus
from .profiles import (
    TowerStepProfile, delta_genus_lower, gs_step_profile, kummer_step_profile,
    next_step, previous_step, profile_at, profiles_up_to,
)
from .step_finder import find_step, previous_profile, step_usable, unusable_reason
from .selfcheck import SelfcheckReport, run_selfcheck

__all__ = [
    'Family', 'TowerId', 'families_for', 'make_tower',
    'gs_genus', 'kummer_genus',
    'TowerStepProfile', 'delta_genus_lower', 'gs_step_profile', 'kummer_step_profile',
    'next_step', 'previous_step', 'profile_at', 'profiles_up_to',
    'find_step', 'previous_profile', 'step_usable', 'unusable_reason',
    'SelfcheckReport', 'run_selfcheck',
]

# Tower families keyed by their CLI/certificate name
AVAILABLE_FAMILIES = {family.value: family for family in Family}
