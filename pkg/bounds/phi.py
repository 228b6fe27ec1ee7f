"""
The piecewise-linear envelope Phi on one tower step.

On a step S with n above n0(S) there are two ways to multiply in F_{q^n}:
use S with 2(n - n0) + eps extra places doubled, or move to the next step
and use every place once. Phi picks the first while the doubled places fit
under D(S), the second afterwards.
"""

from fractions import Fraction
from typing import Tuple, Union

from bounds.certificate import BoundRoute
from errors import OutOfDomainError
from towers.profiles import TowerStepProfile

MULTIPLICITY = "multiplicity"
NEXT_STEP = "next-step"

Number = Union[int, Fraction]


def phi_branches(route: BoundRoute, genus: Number, next_genus: Number, n0: int,
                 x: Number) -> Tuple[Fraction, Fraction]:
    """(multiplicity value, next-step value) at x, on exact rationals."""
    p = route.parameters
    d = route.d
    mult = p["slope"] * (x + Fraction(genus) / 2) + p["gamma"] * (2 * (x - n0) + d - 1) + p["kappa"]
    nxt = p["slope"] * (x + Fraction(next_genus) / 2) + p["kappa"]
    return mult, nxt


def uses_multiplicity(route: BoundRoute, profile: TowerStepProfile, n: int) -> bool:
    return 2 * (n - profile.n0_lower) + route.d - 1 < profile.D


def phi_eval(route: BoundRoute, profile: TowerStepProfile, next_genus_upper: int, n: int) -> Fraction:
    if n < profile.n0_lower:
        raise OutOfDomainError(f"n={n} below n0={profile.n0_lower} of {profile.label}")
    mult, nxt = phi_branches(route, profile.genus_upper, next_genus_upper, profile.n0_lower, n)
    return mult if uses_multiplicity(route, profile, n) else nxt


def vertex(route: BoundRoute, profile: TowerStepProfile) -> Fraction:
    """X = n0 + (D - d + 1)/2, where the multiplicity branch runs out."""
    return profile.n0_lower + Fraction(profile.D - route.d + 1, 2)


def vertex_genus(route: BoundRoute, profile: TowerStepProfile) -> Fraction:
    """Next-step genus that makes both branches meet at the vertex: g + lambda*D."""
    return profile.genus_upper + route.parameters["lambda"] * profile.D
