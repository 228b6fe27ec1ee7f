#!/usr/bin/env python3
"""
Bound engine tests: explicit bound, Phi envelope, closed forms, route
competition and certificate recheck.
"""

import copy
import dataclasses
import json
from fractions import Fraction

import pytest

from bilinear import Inapplicable
from bounds import (
    best_bound, certificate_from_dict, closed_form_bound, closed_forms_for, explicit_prop_bound,
    load_certificate, phi_eval, recheck, save_certificate, vertex,
)
from bounds.certificate import CLOSED_FORM, EXACT_SMALL_N, GENERAL_CC, PHI_ON_TOWER, SHOKROLLAHI, BoundRoute
from bounds.closed_forms import best_slope_form
from bounds.engine import closed_form_certificate, general_cc_certificate, phi_certificate
from bounds.explicit import bound_parameters
from bounds.phi import MULTIPLICITY, NEXT_STEP, phi_branches, vertex_genus
from errors import DivisorConditionViolatedError, OutOfDomainError, RangeError, TableFormatError
from fields import prime_power
from towers import Family, TowerId, gs_step_profile, profiles_up_to

Q2 = prime_power(2)
T4 = TowerId(Family.T4, Q2)
SOUNDNESS_FIELDS = [2, 3, 4, 5, 7, 8, 9, 16, 25]


def route_for(tower: TowerId, table) -> BoundRoute:
    params, _ = bound_parameters(tower.q, tower.d, table)
    return BoundRoute(kind=PHI_ON_TOWER, d=tower.d, tower=tower, parameters=params)


def line_q2(n: int) -> Fraction:
    return Fraction(189, 22) * n + 18


# --- explicit bound ---

def test_binary_degree_4_bound(table):
    for n, g, l in [(20, 6, 3), (40, 23, 0), (100, 57, 10)]:
        expected = Fraction(9, 2) * (n + Fraction(g, 2)) + Fraction(3, 2) * l + 18
        assert explicit_prop_bound(Q2, 4, n, g, l, table) == expected


def test_degree_2_bound_for_q7(table):
    q7 = prime_power(7)
    for n, g in [(10, 4), (33, 17)]:
        assert explicit_prop_bound(q7, 2, n, g, 0, table) == 3 * n + Fraction(3, 2) * g


def test_degree_1_bound_for_q7(table):
    q7 = prime_power(7)
    for n, g, l in [(10, 4, 0), (33, 17, 5)]:
        assert explicit_prop_bound(q7, 1, n, g, l, table) == 2 * n + g + l - 1


def test_divisor_condition(table):
    with pytest.raises(DivisorConditionViolatedError):
        explicit_prop_bound(Q2, 6, 20, 6, 0, table)


def test_lambda_for_binary_tower(table):
    params, _ = bound_parameters(Q2, 4, table)
    assert params["lambda"] == Fraction(2, 3)
    assert params["kappa"] == 18


# --- Phi ---

def test_branch_slopes_for_q2(table):
    params = route_for(T4, table).parameters
    assert params["slope"] == Fraction(9, 2)
    assert params["slope"] + 2 * params["gamma"] == Fraction(15, 2)


@pytest.mark.parametrize("family,q", [(Family.T4, 2), (Family.T2, 16), (Family.T3, 7), (Family.KB, 5)])
def test_branches_meet_at_the_vertex(family, q, table):
    tower = TowerId(family, prime_power(q))
    route = route_for(tower, table)
    for profile in profiles_up_to(tower, 5):
        X = vertex(route, profile)
        mult, nxt = phi_branches(route, profile.genus_upper, vertex_genus(route, profile), profile.n0_lower, X)
        assert mult == nxt


def test_multiplicity_branch_origin_matches_explicit_bound(table):
    tower = TowerId(Family.T2, prime_power(16))
    route = route_for(tower, table)
    profile = gs_step_profile(tower, 2, 0)
    mult, _ = phi_branches(route, profile.genus_upper, profile.genus_upper, profile.n0_lower, profile.n0_lower)
    assert mult == explicit_prop_bound(tower.q, 1, profile.n0_lower, profile.genus_upper, 0, table)


def test_phi_eval_domain(table):
    profile = gs_step_profile(T4, 2, 0)
    with pytest.raises(OutOfDomainError):
        phi_eval(route_for(T4, table), profile, 23, profile.n0_lower - 1)


def test_phi_eval_picks_the_branch(table):
    route = route_for(T4, table)
    profile = gs_step_profile(T4, 1, 1)
    # n0 = 11, D = 6: doubled places 2(n - 11) + 3 stay below 6 only at n = 11, 12
    assert phi_eval(route, profile, 6, 12) == Fraction(84)
    assert phi_eval(route, profile, 6, 13) == Fraction(9, 2) * (13 + 3) + 18


def test_binary_phi_envelope_stays_under_the_line(table):
    for n in range(12, 5001):
        nxt = phi_certificate(Q2, n, T4, NEXT_STEP, table)
        assert not isinstance(nxt, Inapplicable), n
        values = [nxt.value]
        doubled = phi_certificate(Q2, n, T4, MULTIPLICITY, table)
        if not isinstance(doubled, Inapplicable):
            values.append(doubled.value)
        assert min(values) <= line_q2(n), n


def test_phi_branch_name_checked(table):
    with pytest.raises(RangeError):
        phi_certificate(Q2, 40, T4, "sideways", table)


# --- closed forms ---

def test_uniform_slopes():
    expected = {2: Fraction(189, 22), 3: Fraction(6), 4: Fraction(87, 19), 5: Fraction(9, 2)}
    for q, slope in expected.items():
        assert best_slope_form(prime_power(q)).slope == slope


def test_parametric_forms():
    names = {q: {f.name for f in closed_forms_for(prime_power(q))} for q in (9, 16, 25, 49, 7)}
    assert names[9] == {"q=p^2, p>=3", "q>5"}
    assert names[16] == {"q=Q^2, Q>=4", "q>5"}
    assert names[25] == {"q=Q^2, Q>=4", "q=p^2, p>=3", "q>5"}
    assert names[49] == {"q=Q^2, Q>=4", "q=p^2, p>=3", "q>5"}
    assert names[7] == {"q>5", "q=p>5"}
    slopes = {f.name: f.slope for f in closed_forms_for(prime_power(25))}
    assert slopes["q=Q^2, Q>=4"] == Fraction(68, 19)
    assert slopes["q=p^2, p>=3"] == 3


def test_closed_form_values():
    assert closed_form_bound(Q2, 100) == Fraction(18900, 22) + 18
    assert int(closed_form_bound(Q2, 100)) == 877
    assert closed_form_bound(prime_power(16), 10) == Fraction(233, 7)
    assert closed_form_bound(prime_power(9), 7) == 27
    assert closed_form_bound(prime_power(7), 10) == 40


def test_closed_form_needs_n_at_least_2():
    assert isinstance(closed_form_bound(Q2, 1), Inapplicable)


def test_small_n_claim_is_cited(table):
    q3 = prime_power(3)
    keys = [e.key for e in closed_form_certificate(q3, 5, table).table_entries_used]
    assert "mu_3_small_n(n<=10)" in keys
    assert closed_form_certificate(q3, 11, table).table_entries_used == []


# --- best_bound ---

def test_exact_small_n():
    cert = best_bound(prime_power(8), 5)
    assert cert.value == 9
    assert cert.kind == EXACT_SMALL_N


def test_n_equal_1():
    assert best_bound(Q2, 1).value == 1


def test_n_must_be_positive():
    with pytest.raises(RangeError):
        best_bound(Q2, 0)


def test_shokrollahi_range():
    cert = best_bound(prime_power(7), 5)
    assert cert.kind == SHOKROLLAHI
    assert cert.value == 10


def test_q2_n12():
    cert = best_bound(Q2, 12)
    assert cert.value <= line_q2(12)
    assert cert.value_floor <= 224


def test_q2_n100_beats_the_line():
    cert = best_bound(Q2, 100)
    assert cert.value_floor <= 877
    assert cert.kind in (CLOSED_FORM, PHI_ON_TOWER)


def test_general_cc_direct_on_kummer_quadratic(table):
    q9 = prime_power(9)
    cert = general_cc_certificate(q9, 20, TowerId(Family.KQ, q9), table)
    assert cert.kind == GENERAL_CC
    assert cert.route.step == (3, None)
    assert cert.route.parameters["single"] == 16
    assert cert.route.parameters["doubled"] == 16
    assert cert.value == 64
    assert recheck(cert, table)


@pytest.mark.parametrize("q", SOUNDNESS_FIELDS)
def test_best_bound_certificates_recheck(q, table):
    pq = prime_power(q)
    for n in range(1, 2001):
        cert = best_bound(pq, n, table)
        assert recheck(cert, table), (q, n)
        assert cert.value_floor >= n
        if 2 * n - 2 <= q:
            assert cert.value == 2 * n - 1


def test_certificate_file_round_trip(tmp_path, table):
    cert = best_bound(Q2, 100, table)
    path = tmp_path / "cert.json"
    save_certificate(cert, str(path))
    loaded = load_certificate(str(path))
    assert loaded.to_dict() == cert.to_dict()
    assert recheck(loaded, table)


def test_malformed_certificate(tmp_path):
    path = tmp_path / "cert.json"
    path.write_text(json.dumps({"q": 2}))
    with pytest.raises(TableFormatError):
        load_certificate(str(path))


# --- tampering ---

def bump(text: str, delta: int) -> str:
    x = Fraction(text) + delta
    return f"{x.numerator}/{x.denominator}"


def test_perturbed_premise_fails(table):
    cert = best_bound(Q2, 40, table)
    data = cert.to_dict()
    data["premises"][0]["lhs"] = bump(data["premises"][0]["lhs"], 1)
    assert not recheck(certificate_from_dict(data), table)


def test_shaved_value_fails(table):
    cert = best_bound(Q2, 100, table)
    assert not recheck(dataclasses.replace(cert, value=cert.value - Fraction(1, 22)), table)


def test_random_tampering_is_detected(rng, table):
    certs = [best_bound(prime_power(q), n, table) for q in SOUNDNESS_FIELDS for n in (1, 3, 12, 40, 250)]
    for _ in range(100):
        cert = rng.choice(certs)
        data = copy.deepcopy(cert.to_dict())
        premise = rng.choice(data["premises"])
        side = rng.choice(["lhs", "rhs"])
        premise[side] = bump(premise[side], rng.choice([-1, 1]))
        assert not recheck(certificate_from_dict(data), table)
