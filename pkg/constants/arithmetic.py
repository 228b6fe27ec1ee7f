"""
Closed-form constants used by the bound routes, all in exact arithmetic.

Rationals are fractions.Fraction throughout; nothing on a certified path
touches floating point.
"""

from fractions import Fraction
from math import gcd, isqrt
from typing import List, Tuple

from constants.registry import KnownValues, UsedEntry
from errors import MissingTableEntryError
from fields.prime_power import PrimePower, divisors, is_prime, is_square


def fmt_rational(x: Fraction) -> str:
    """Always "num/den", even for integers, so certificates parse uniformly."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(str(text))


def epsilon(q: PrimePower) -> int:
    """
    2*sqrt(q) when q is a square, otherwise the greatest t <= 2*sqrt(q) prime to q.

    t <= 2*sqrt(q) is tested as t^2 <= 4q, so isqrt(4q) is the starting point.
    """
    n = q.q
    if is_square(n):
        return 2 * isqrt(n)
    t = isqrt(4 * n)
    while t > 0 and gcd(t, n) != 1:
        t -= 1
    return t


def alpha(q: PrimePower) -> int:
    if q.q == 2:
        return 5
    if q.q in (3, 4, 5):
        return 2
    return -1


def e_const(q: PrimePower) -> int:
    if q.q == 2:
        return 2
    if q.q in (3, 4, 5):
        return 1
    return 0


def shokrollahi_upper(q: PrimePower) -> Fraction:
    """Exclusive upper end (q + 1 + eps(q)) / 2 of the 2n range."""
    return Fraction(q.q + 1 + epsilon(q), 2)


def gamma_with_entries(q: PrimePower, d: int, table: KnownValues) -> Tuple[Fraction, List[UsedEntry]]:
    """max_{i|d} mu_q(i,2)/i - 2 mu^sym_q(d)/d, from table upper bounds."""
    used: List[UsedEntry] = []
    best = None
    for i in divisors(d):
        entry = table.mu_upper(q, i, 2)
        used.append(entry)
        ratio = Fraction(entry.value, i)
        best = ratio if best is None else max(best, ratio)
    sym = table.mu_sym_upper(q, d)
    used.append(sym)
    return best - Fraction(2 * sym.value, d), used


def gamma(q: PrimePower, d: int, table: KnownValues) -> Fraction:
    return gamma_with_entries(q, d, table)[0]


def kappa(q: PrimePower, d: int, table: KnownValues) -> Fraction:
    """(mu^sym_q(d)/d)(alpha_q + d - 1), the additive constant of the explicit bound."""
    sym = table.mu_sym_upper(q, d).value
    return Fraction(sym, d) * (alpha(q) + d - 1)


def c_q_rows(q: PrimePower) -> List[Tuple[str, Fraction]]:
    """Every row of the C_q table that applies to q, in table order."""
    n, p = q.q, q.p
    rows: List[Tuple[str, Fraction]] = []
    if n == 2:
        rows.append(("q=2", Fraction(22)))
    if n == 3:
        rows.append(("q=3", Fraction(27)))
    if is_prime(n) and n >= 5:
        rows.append(("q=p>=5", 3 * (1 + Fraction(4, n - 3))))
    if q.r == 2 and n >= 25:
        rows.append(("q=p^2>=25", 2 * (1 + Fraction(2, isqrt(n) - 3))))
    if q.r % 2 == 0 and n >= 16:
        rows.append(("q=p^2k>=16", 2 * (1 + Fraction(p, isqrt(n) - 3))))
    if n >= 16:
        rows.append(("q>=16", 3 * (1 + Fraction(2 * p, n - 3))))
    if n > 3:
        rows.append(("q>3", 6 * (1 + Fraction(p, n - 3))))
    return rows


def c_q_table(q: PrimePower) -> Fraction:
    """Minimum over the matching C_q rows."""
    rows = c_q_rows(q)
    if not rows:
        raise MissingTableEntryError(f"no C_q row for q={q.q}")
    return min(value for _, value in rows)
