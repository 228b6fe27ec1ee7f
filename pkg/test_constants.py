#!/usr/bin/env python3
"""
Constants registry tests: closed-form constants and the known-values table.
"""

import json
from fractions import Fraction

import pytest

import config
from constants import (
    CONSTANT_FUNCTIONS, alpha, c_q_rows, c_q_table, e_const, epsilon, gamma, kappa,
    load_known_values,
)
from constants.arithmetic import fmt_rational, parse_rational
from errors import MissingTableEntryError, TableFormatError
from fields import prime_power


@pytest.mark.parametrize("q,expected", [(4, 4), (7, 5), (5, 4), (2, 1), (9, 6), (8, 5), (3, 2)])
def test_epsilon(q, expected):
    assert epsilon(prime_power(q)) == expected


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 11])
def test_epsilon_of_a_square(q):
    assert epsilon(prime_power(q * q)) == 2 * q


@pytest.mark.parametrize("q,expected", [(2, 5), (3, 2), (4, 2), (5, 2), (7, -1), (16, -1)])
def test_alpha(q, expected):
    assert alpha(prime_power(q)) == expected


@pytest.mark.parametrize("q,expected", [(2, 2), (3, 1), (4, 1), (5, 1), (7, 0), (9, 0)])
def test_e_const(q, expected):
    assert e_const(prime_power(q)) == expected


@pytest.mark.parametrize("q,d,expected", [(2, 4, Fraction(3, 2)), (3, 2, Fraction(3, 2)), (7, 2, Fraction(1, 2)),
                                          (7, 1, Fraction(1)), (4, 2, Fraction(1))])
def test_gamma(q, d, expected, table):
    assert gamma(prime_power(q), d, table) == expected


def test_kappa_for_binary_degree_4(table):
    assert kappa(prime_power(2), 4, table) == 18


def test_gamma_needs_table_entries(table):
    with pytest.raises(MissingTableEntryError):
        gamma(prime_power(2), 3, table)


@pytest.mark.parametrize("q,expected", [(2, Fraction(22)), (3, Fraction(27)), (25, Fraction(4)),
                                        (7, Fraction(6))])
def test_c_q_table(q, expected):
    assert c_q_table(prime_power(q)) == expected


def test_c_q_overlapping_rows_take_the_minimum():
    rows = dict(c_q_rows(prime_power(16)))
    assert rows["q=p^2k>=16"] == 6
    assert rows["q>=16"] == Fraction(51, 13)
    assert c_q_table(prime_power(16)) == Fraction(51, 13)


def test_constant_functions_registry():
    assert set(CONSTANT_FUNCTIONS) == {"epsilon", "alpha", "e", "C_q"}
    assert CONSTANT_FUNCTIONS["alpha"](prime_power(2)) == 5


def test_rationals_stay_exact():
    assert Fraction(189, 22) * 22 == 189
    assert fmt_rational(Fraction(6)) == "6/1"
    assert parse_rational("189/22") == Fraction(189, 22)


# --- known values table ---

def test_shipped_table_values(table):
    q2 = prime_power(2)
    assert table.mu_sym_upper(q2, 4).value == 9
    assert table.mu_upper(q2, 4, 2).value == 24
    assert table.mu_upper(q2, 6).value == 15
    assert table.mu_upper(prime_power(3), 4).value == 9
    assert table.mu_upper(prime_power(4), 4).value == 8
    assert table.mu_upper(prime_power(3), 2, 2).value == 9
    assert table.mu_upper(prime_power(11), 2, 2).value == 7


def test_small_degrees_are_generated(table):
    entry = table.exact("mu", prime_power(8), 5)
    assert entry.value == 9
    assert table.exact("mu", prime_power(8), 6) is None


def test_ratio_monotonicity(table):
    q2 = prime_power(2)
    assert Fraction(table.mu_sym_upper(q2, 2).value, 2) <= Fraction(table.mu_sym_upper(q2, 4).value, 4)


def test_every_entry_has_provenance(table):
    assert table.version
    assert all(e.provenance for e in table.entries)
    assert table.claim("mu_3_small_n").n_max == 10
    assert table.claim("mu_4_small_n").slope == Fraction(87, 19)


def test_missing_entry(table):
    with pytest.raises(MissingTableEntryError):
        table.mu_upper(prime_power(2), 7, 3)


def write_table(path, entries, claims=()):
    path.write_text(json.dumps({"version": "test", "entries": entries, "claims": list(claims)}))
    return str(path)


def test_exact_above_upper_rejected(tmp_path):
    entries = [
        {"quantity": "mu", "bound": "exact", "m": 6, "l": 1, "q": [2], "value": 16, "provenance": "x"},
        {"quantity": "mu", "bound": "upper", "m": 6, "l": 1, "q": [2], "value": 15, "provenance": "y"},
    ]
    with pytest.raises(TableFormatError):
        load_known_values(write_table(tmp_path / "bad.json", entries))


def test_overlap_is_found_for_large_q(tmp_path):
    exact = {"quantity": "mu", "bound": "exact", "m": 2, "l": 2, "q": [128], "value": 9, "provenance": "x"}
    upper = {"quantity": "mu", "bound": "upper", "m": 2, "l": 2, "q": {"min": 100}, "value": 8, "provenance": "y"}
    with pytest.raises(TableFormatError):
        load_known_values(write_table(tmp_path / "list.json", [exact, upper]))
    open_ended = dict(exact, q={"min": 300})
    with pytest.raises(TableFormatError):
        load_known_values(write_table(tmp_path / "ranges.json", [open_ended, upper]))
    disjoint = dict(exact, q=[97])
    table = load_known_values(write_table(tmp_path / "ok.json", [disjoint, upper]))
    assert len(table.entries) == 2


def test_small_degree_entry_must_equal_2m_minus_1(tmp_path):
    entries = [{"quantity": "mu", "bound": "exact", "m": 3, "l": 1, "q": [8], "value": 6, "provenance": "x"}]
    with pytest.raises(TableFormatError):
        load_known_values(write_table(tmp_path / "bad.json", entries))


def test_malformed_table_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(TableFormatError):
        load_known_values(str(path))
    with pytest.raises(TableFormatError):
        load_known_values(str(tmp_path / "missing.json"))


def test_table_path_override(monkeypatch, tmp_path):
    monkeypatch.setenv("MURANK_TABLE", str(tmp_path / "alt.json"))
    assert config.table_path() == str(tmp_path / "alt.json")
    assert config.table_path("cli.json") == "cli.json"
