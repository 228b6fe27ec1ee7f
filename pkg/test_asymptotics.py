#!/usr/bin/env python3
"""
Asymptotic bound tests: uniform slopes and the curve-family bound.
"""

from fractions import Fraction

import pytest

from asymptotics import AsymptoticBound, best_asymptotic, shimura_asymptotic, uniform_asymptotic
from asymptotics.limits import UNIFORM
from errors import NotASquareError, RangeError
from fields import prime_power


@pytest.mark.parametrize("q,expected", [(2, Fraction(189, 22)), (3, Fraction(6)), (4, Fraction(87, 19)),
                                        (5, Fraction(9, 2)), (9, Fraction(4))])
def test_uniform_asymptotic(q, expected):
    result = uniform_asymptotic(prime_power(q))
    assert result.value == expected
    assert result.route == UNIFORM
    assert result.mu_qt_used is None


@pytest.mark.parametrize("q,t,expected", [(2, 6, Fraction(35, 6)), (3, 4, Fraction(36, 7)), (4, 4, Fraction(30, 7)),
                                          (5, 2, Fraction(4)), (7, 2, Fraction(18, 5)), (8, 2, Fraction(7, 2))])
def test_family_bound_reproduces_printed_values(q, t, expected, table):
    result = shimura_asymptotic(prime_power(q), t, table)
    assert result.value == expected
    assert result.t == t
    assert "not constructed" in result.mu_qt_used[2]


def test_family_bound_needs_a_square():
    with pytest.raises(NotASquareError):
        shimura_asymptotic(prime_power(2), 3, mu_qt=8)
    with pytest.raises(NotASquareError):
        shimura_asymptotic(prime_power(2), 2, mu_qt=3)


def test_lower_mu_never_raises_the_bound():
    q = prime_power(2)
    values = [shimura_asymptotic(q, 6, mu_qt=mu).value for mu in range(20, 10, -1)]
    assert values == sorted(values, reverse=True)


@pytest.mark.parametrize("q,t_max,expected", [(8, 4, Fraction(7, 2)), (5, 2, Fraction(4)), (2, 8, Fraction(35, 6)),
                                              (3, 8, Fraction(36, 7)), (7, 2, Fraction(18, 5)),
                                              (7, 4, Fraction(168, 47))])
def test_best_asymptotic(q, t_max, expected, table):
    assert best_asymptotic(prime_power(q), t_max, table).value == expected


def test_best_asymptotic_for_q4_uses_the_cubic_extension(table):
    # mu_4(3) = 5 by interpolation and 4^3 is a square
    result = best_asymptotic(prime_power(4), 6, table)
    assert result.value == Fraction(35, 9)
    assert result.t == 3
    assert result.value < shimura_asymptotic(prime_power(4), 4, table).value


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25])
def test_family_bound_only_helps(q, table):
    pq = prime_power(q)
    assert best_asymptotic(pq, 8, table).value <= uniform_asymptotic(pq).value


def test_t_max_must_be_positive():
    with pytest.raises(RangeError):
        best_asymptotic(prime_power(2), 0)


def test_bound_above_two_enforced():
    with pytest.raises(RangeError):
        AsymptoticBound(q=2, value=Fraction(2), route=UNIFORM)
