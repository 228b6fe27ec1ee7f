"""
The explicit degree-d bound

    mu_q(n) <= (2 mu^sym_q(d)/d)(n + g/2) + gamma_{q,d} * sum i*l_i + kappa_{q,d}

for a function field with a degree-n place and enough degree-weighted places.
gamma and kappa enter positively, so their table upper bounds are used.
"""

from fractions import Fraction
from typing import Dict, List, Tuple

from bounds.certificate import Premise, premise
from constants.arithmetic import alpha, gamma_with_entries, shokrollahi_upper
from constants.registry import KnownValues, UsedEntry
from errors import DivisorConditionViolatedError
from fields.prime_power import PrimePower, divisors


def divisor_premises(q: PrimePower, d: int) -> List[Premise]:
    """Every proper divisor j of d must be small enough for mu^sym(j)/j <= mu^sym(d)/d."""
    out = []
    for j in divisors(d):
        if j == d:
            continue
        if q.q >= 4:
            out.append(premise(f"proper divisor {j} of d={d} below (q+1+eps)/2", j, shokrollahi_upper(q), "<"))
        else:
            out.append(premise(f"proper divisor {j} of d={d} at most q/2+1", j, Fraction(q.q, 2) + 1, "<="))
    return out


def check_divisor_condition(q: PrimePower, d: int) -> List[Premise]:
    premises = divisor_premises(q, d)
    for p in premises:
        if not p.holds():
            raise DivisorConditionViolatedError(f"q={q.q}, d={d}: {p.name} fails")
    return premises


def bound_parameters(q: PrimePower, d: int, table: KnownValues) -> Tuple[Dict[str, Fraction], List[UsedEntry]]:
    """slope 2mu^sym/d, gamma, kappa and lambda = d*gamma/mu^sym for degree d."""
    g_value, used = gamma_with_entries(q, d, table)
    sym = table.mu_sym_upper(q, d).value
    ratio = Fraction(sym, d)
    params = {
        "mu_sym_over_d": ratio,
        "slope": 2 * ratio,
        "gamma": g_value,
        "alpha": Fraction(alpha(q)),
        "kappa": ratio * (alpha(q) + d - 1),
        "lambda": Fraction(d) * g_value / sym,
    }
    return params, used


def explicit_prop_bound_with_entries(q: PrimePower, d: int, n: int, g_upper: int, weighted_l: int,
                                     table: KnownValues) -> Tuple[Fraction, List[UsedEntry]]:
    check_divisor_condition(q, d)
    params, used = bound_parameters(q, d, table)
    value = params["slope"] * (n + Fraction(g_upper, 2)) + params["gamma"] * weighted_l + params["kappa"]
    return value, used


def explicit_prop_bound(q: PrimePower, d: int, n: int, g_upper: int, weighted_l: int,
                        table: KnownValues) -> Fraction:
    return explicit_prop_bound_with_entries(q, d, n, g_upper, weighted_l, table)[0]
