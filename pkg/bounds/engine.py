"""
best_bound: the least certified upper bound on mu_q(n) over every route.

Routes
  exact-small-n              2n-1 by interpolation when n <= q/2+1
  shokrollahi-sym-reference  2n when q/2+1 < n < (q+1+eps)/2
  closed-form-theorem        the best uniform linear bound
  phi-on-tower               the explicit bound on a tower step, either branch
  general-cc-direct          degree-1 families: exact place budget on one step

Each builder returns a BoundCertificate or an Inapplicable with the first
failing hypothesis. Builders are deterministic, so recheck rebuilds a
certificate from its route and compares.
"""

import logging
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Union

from bilinear.general_cc import (
    Inapplicable, PlaceBudget, general_cc_bound_with_entries, place_rhs_capped,
)
from bounds.certificate import (
    CLOSED_FORM, EXACT_SMALL_N, GENERAL_CC, PHI_ON_TOWER, SHOKROLLAHI,
    BoundCertificate, BoundRoute, Premise, make_certificate, premise,
)
from bounds.closed_forms import ClosedForm, best_form_at, form_by_name
from bounds.explicit import bound_parameters, divisor_premises, explicit_prop_bound_with_entries
from bounds.phi import MULTIPLICITY, NEXT_STEP, phi_eval
from constants.arithmetic import e_const, shokrollahi_upper
from constants.registry import KnownValues, UsedEntry, default_table
from errors import MuRankError, RangeError
from fields.prime_power import PrimePower
from towers.ids import TowerId, families_for
from towers.profiles import TowerStepProfile, delta_genus_lower
from towers.step_finder import find_step, previous_profile

logger = logging.getLogger(__name__)

Outcome = Union[BoundCertificate, Inapplicable]

SHOKROLLAHI_PROVENANCE = ("mu^sym_q(n) = 2n for q/2+1 < n < (q+1+eps(q))/2 via elliptic-curve "
                          "evaluation; the curves are not constructed here")
PHI_DOMAIN_READING = ("domain reading: the tower step is the first one satisfying condition (2) "
                      "with a degree-n place and genus >= 2; the multiplicity branch runs on the "
                      "step before it for n above that step's n0")
DIRECT_PROVENANCE = "generalized evaluation theorem with multiplicity-2 degree-1 places on one step"


def _failed(premises: List[Premise]) -> Optional[Inapplicable]:
    for p in premises:
        if not p.holds():
            return Inapplicable(f"{p.name}: {p.lhs} {p.relation} {p.rhs} fails")
    return None


def place_premise(label: str, profile: TowerStepProfile, n: int) -> Premise:
    lhs = 2 * profile.genus_upper + 1
    return premise(f"degree-{n} place on {label}", lhs, place_rhs_capped(profile.tower.q.q, n, lhs), "<=")


# --- Small n ---

def exact_small_n_certificate(q: PrimePower, n: int, table: KnownValues) -> Outcome:
    premises = [premise("n within interpolation range: 2n-2 <= q", 2 * n - 2, q.q, "<=")]
    failed = _failed(premises)
    if failed:
        return failed
    entry = table.exact("mu", q, n)
    route = BoundRoute(kind=EXACT_SMALL_N, provenance=entry.provenance)
    return make_certificate(q.q, n, Fraction(entry.value), route, premises, [entry])


def shokrollahi_certificate(q: PrimePower, n: int, table: KnownValues) -> Outcome:
    premises = [
        premise("n above interpolation range: 2n-2 > q", 2 * n - 2, q.q, ">"),
        premise("n below (q+1+eps)/2", n, shokrollahi_upper(q), "<"),
    ]
    failed = _failed(premises)
    if failed:
        return failed
    entry = UsedEntry(f"mu_sym_{q.q}({n},1)", 2 * n, SHOKROLLAHI_PROVENANCE)
    route = BoundRoute(kind=SHOKROLLAHI, provenance=SHOKROLLAHI_PROVENANCE)
    return make_certificate(q.q, n, Fraction(2 * n), route, premises, [entry])


# --- Uniform closed forms ---

def _form_certificate(q: PrimePower, n: int, form: ClosedForm, table: KnownValues) -> Outcome:
    premises = [premise("n at least 2", n, 2, ">=")]
    premises += [premise(name, lhs, rhs, rel) for name, lhs, rhs, rel in form.hypotheses]
    failed = _failed(premises)
    if failed:
        return failed
    entries: List[UsedEntry] = []
    if form.claim:
        claim = table.claim(form.claim)
        if n <= claim.n_max:
            premises.append(premise(f"n within {claim.name}", n, claim.n_max, "<="))
            premises.append(premise(f"{claim.name} slope within the form", claim.slope, form.slope, "<="))
            entries.append(UsedEntry.from_claim(claim))
    route = BoundRoute(kind=CLOSED_FORM, branch=form.name,
                       parameters={"slope": form.slope, "intercept": form.intercept},
                       provenance=f"uniform bound {form.slope} n + {form.intercept} for q: {form.name}")
    return make_certificate(q.q, n, form.value(n), route, premises, entries)


def closed_form_certificate(q: PrimePower, n: int, table: KnownValues,
                            form_name: Optional[str] = None) -> Outcome:
    form = best_form_at(q, n) if form_name is None else form_by_name(q, form_name)
    if isinstance(form, Inapplicable):
        return form
    return _form_certificate(q, n, form, table)


# --- Tower routes ---

def _tower_route(tower: TowerId, table: KnownValues, step, branch: str, kind: str = PHI_ON_TOWER,
                 extra: Optional[Dict[str, Fraction]] = None):
    params, used = bound_parameters(tower.q, tower.d, table)
    if extra:
        params = {**params, **extra}
    provenance = PHI_DOMAIN_READING if kind == PHI_ON_TOWER else DIRECT_PROVENANCE
    route = BoundRoute(kind=kind, d=tower.d, tower=tower, step=step, branch=branch,
                       parameters=params, provenance=provenance)
    return route, used


def _tower_base_premises(tower: TowerId, n: int) -> List[Premise]:
    return [premise(f"n at or above the {tower.family.value} threshold", n, tower.threshold, ">=")]


def phi_certificate(q: PrimePower, n: int, tower: TowerId, branch: str, table: KnownValues) -> Outcome:
    if tower.q != q:
        return Inapplicable(f"{tower.label} does not target q={q.q}")
    premises = _tower_base_premises(tower, n)
    failed = _failed(premises)
    if failed:
        return failed
    try:
        found = find_step(tower, n)
    except MuRankError as exc:
        return Inapplicable(str(exc))
    premises += divisor_premises(q, tower.d)

    if branch == NEXT_STEP:
        label = found.label
        premises += [
            premise(f"condition (2) on {label}", found.weighted_places_lower,
                    2 * n + found.genus_upper + tower.alpha, ">="),
            premise(f"genus of {label} at least 2", found.genus_lower, 2, ">="),
            place_premise(label, found, n),
        ]
        failed = _failed(premises)
        if failed:
            return failed
        route, used = _tower_route(tower, table, found.step, NEXT_STEP)
        value, more = explicit_prop_bound_with_entries(q, tower.d, n, found.genus_upper, 0, table)
        return make_certificate(q.q, n, value, route, premises, used + more)

    if branch != MULTIPLICITY:
        raise RangeError(f"unknown phi branch {branch!r}")
    before = previous_profile(found)
    if before is None:
        return Inapplicable(f"{found.label} is the first step of {tower.label}")
    route, used = _tower_route(tower, table, before.step, MULTIPLICITY)
    label = before.label
    n0 = before.n0_lower
    doubled = 2 * (n - n0) + tower.d - 1
    premises += [
        premise(f"n above n0 of {label}", n, n0, ">"),
        premise(f"places with doubling cover 2n+g+alpha on {label}",
                before.weighted_places_lower + 2 * (n - n0), 2 * n + before.genus_upper + tower.alpha, ">="),
        premise(f"doubled places below D on {label}", doubled, before.D, "<"),
        premise(f"D within the places of {label}", before.D, before.weighted_places_lower, "<="),
        premise(f"genus of {label} at least 2", before.genus_lower, 2, ">="),
        premise(f"genus jump after {label} at least lambda*D", delta_genus_lower(tower, before.step),
                route.parameters["lambda"] * before.D, ">="),
        place_premise(label, before, n),
    ]
    failed = _failed(premises)
    if failed:
        return failed
    value = phi_eval(route, before, found.genus_upper, n)
    _, more = explicit_prop_bound_with_entries(q, tower.d, n, before.genus_upper, doubled, table)
    return make_certificate(q.q, n, value, route, premises, used + more)


def general_cc_certificate(q: PrimePower, n: int, tower: TowerId, table: KnownValues) -> Outcome:
    """Degree-1 families: double exactly the missing places on the step before find_step's."""
    if tower.q != q:
        return Inapplicable(f"{tower.label} does not target q={q.q}")
    if tower.d != 1:
        return Inapplicable(f"{tower.label} uses places of degree up to {tower.d}")
    premises = _tower_base_premises(tower, n)
    failed = _failed(premises)
    if failed:
        return failed
    try:
        found = find_step(tower, n)
    except MuRankError as exc:
        return Inapplicable(str(exc))
    step = previous_profile(found)
    if step is None:
        return Inapplicable(f"{found.label} is the first step of {tower.label}")

    places = step.weighted_places_lower
    need = 2 * n + 3 * e_const(q) + step.genus_upper - 1
    doubled = max(0, need - places)
    single = need - 2 * doubled
    label = step.label
    premises += [
        premise(f"genus of {label} at least 2", step.genus_lower, 2, ">="),
        place_premise(label, step, n),
        premise(f"single places nonnegative on {label}", single, 0, ">="),
        premise(f"places used within B_1 of {label}", single + doubled, places, "<="),
        premise(f"weighted places cover 2n+3e+g-1 on {label}", single + 2 * doubled, need, ">="),
    ]
    failed = _failed(premises)
    if failed:
        return failed
    budget = PlaceBudget(entries=[(1, 1, single), (1, 2, doubled)], degree_caps={1: places})
    value, used = general_cc_bound_with_entries(q, n, 1, step.genus_upper, budget, False, table)
    if isinstance(value, Inapplicable):
        return value
    route, _ = _tower_route(tower, table, step.step, None, kind=GENERAL_CC,
                            extra={"single": Fraction(single), "doubled": Fraction(doubled)})
    return make_certificate(q.q, n, value, route, premises, used)


# --- Route competition ---

def candidate_certificates(q: PrimePower, n: int, table: KnownValues) -> List[BoundCertificate]:
    outcomes: List[Outcome] = [
        exact_small_n_certificate(q, n, table),
        shokrollahi_certificate(q, n, table),
        closed_form_certificate(q, n, table),
    ]
    for tower in families_for(q):
        if not tower.admits(n):
            continue
        outcomes.append(phi_certificate(q, n, tower, NEXT_STEP, table))
        outcomes.append(phi_certificate(q, n, tower, MULTIPLICITY, table))
        if tower.d == 1:
            outcomes.append(general_cc_certificate(q, n, tower, table))

    out = []
    for o in outcomes:
        if isinstance(o, Inapplicable):
            logger.debug(f"⚠️ q={q.q} n={n}: {o}")
        else:
            out.append(o)
    return out


def best_bound(q: PrimePower, n: int, table: Optional[KnownValues] = None) -> BoundCertificate:
    if n < 1:
        raise RangeError(f"n must be at least 1, got {n}")
    table = table or default_table()
    candidates = candidate_certificates(q, n, table)
    # ties go to the simpler certificate
    best = min(candidates, key=lambda c: (c.value, len(c.premises)))
    logger.debug(f"✅ mu_{q.q}({n}) <= {best.value_floor} via {best.kind}")
    return best


# --- Rebuilding for recheck ---

_REBUILDERS: Dict[str, Callable[[BoundCertificate, PrimePower, KnownValues], Outcome]] = {
    EXACT_SMALL_N: lambda c, q, t: exact_small_n_certificate(q, c.n, t),
    SHOKROLLAHI: lambda c, q, t: shokrollahi_certificate(q, c.n, t),
    CLOSED_FORM: lambda c, q, t: closed_form_certificate(q, c.n, t, c.route.branch),
    PHI_ON_TOWER: lambda c, q, t: (phi_certificate(q, c.n, c.route.tower, c.route.branch, t)
                                   if c.route.tower is not None else Inapplicable("no tower recorded")),
    GENERAL_CC: lambda c, q, t: (general_cc_certificate(q, c.n, c.route.tower, t)
                                 if c.route.tower is not None else Inapplicable("no tower recorded")),
}


def rebuild(cert: BoundCertificate, q: PrimePower, table: KnownValues) -> Outcome:
    builder = _REBUILDERS.get(cert.route.kind)
    if builder is None:
        return Inapplicable(f"unknown route kind {cert.route.kind!r}")
    return builder(cert, q, table)


# Route builders by kind, for the CLI and reports
AVAILABLE_ROUTES = {
    EXACT_SMALL_N: exact_small_n_certificate,
    SHOKROLLAHI: shokrollahi_certificate,
    CLOSED_FORM: closed_form_certificate,
    PHI_ON_TOWER: phi_certificate,
    GENERAL_CC: general_cc_certificate,
}
