#!/usr/bin/env python3
"""
Bilinear algorithm tests: verification, interpolation construction,
exhaustive rank search and the generalized evaluation bound.
"""

import time
from fractions import Fraction

import numpy as np
import pytest

from bilinear import (
    BilinearDecomposition, Inapplicable, NotFound, PlaceBudget, Triple, brute_force_min_rank,
    build_interpolation_algorithm, build_truncated_interpolation_algorithm, decomposition_from_dict,
    decomposition_to_dict, general_cc_bound, has_place_of_degree, rescale_triple, structure_tensor,
    verify_decomposition,
)
from errors import BudgetExceededError, RangeError
from fields import make_algebra, make_field, prime_power
from fields.finite_field import smallest_irreducible

PRIME_POWERS_UP_TO_16 = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]
INTERPOLATION_CASES = [(q, n) for q in PRIME_POWERS_UP_TO_16 for n in range(1, q // 2 + 2)]


def test_single_multiplication_in_fq():
    A = make_algebra(make_field(5, 1), 1, 1)
    one = A.ground.one
    dec = BilinearDecomposition(A, [Triple((one,), (one,), (one,))], symmetric=True)
    assert verify_decomposition(dec)
    assert dec.rank == 1


def test_karatsuba_over_f2():
    dec = build_interpolation_algorithm(prime_power(2), 2)
    assert dec.rank == 3
    assert dec.symmetric
    assert verify_decomposition(dec)


def test_zeroed_output_vector_fails():
    dec = build_interpolation_algorithm(prime_power(2), 2)
    A = dec.algebra
    broken = list(dec.triples)
    broken[0] = Triple(broken[0].a, broken[0].b, A.zero())
    assert not verify_decomposition(BilinearDecomposition(A, broken))


def test_five_point_algorithm_over_f5():
    dec = build_interpolation_algorithm(prime_power(5), 3)
    assert dec.rank == 5
    assert verify_decomposition(dec)


def test_interpolation_range_enforced():
    with pytest.raises(RangeError):
        build_interpolation_algorithm(prime_power(2), 3)


@pytest.mark.parametrize("q,n", INTERPOLATION_CASES)
def test_interpolation_rank_is_2n_minus_1(q, n):
    dec = build_interpolation_algorithm(prime_power(q), n)
    assert dec.rank == 2 * n - 1
    assert verify_decomposition(dec)


def test_interpolation_cases_build_and_verify_within_a_second():
    # cold caches: the extension moduli are searched again
    make_field.cache_clear()
    make_algebra.cache_clear()
    smallest_irreducible.cache_clear()
    start = time.perf_counter()
    for q, n in INTERPOLATION_CASES:
        assert verify_decomposition(build_interpolation_algorithm(prime_power(q), n)), (q, n)
    assert time.perf_counter() - start < 1.0


@pytest.mark.parametrize("q,n", [(5, 3), (4, 3), (7, 4)])
def test_rescaling_keeps_verdict(q, n):
    dec = build_interpolation_algorithm(prime_power(q), n)
    F = dec.algebra.ground
    for index in range(dec.rank):
        scaled = rescale_triple(dec, index, F.from_int(2))
        assert verify_decomposition(scaled)


def test_symmetric_flag_requires_equal_forms():
    dec = build_interpolation_algorithm(prime_power(3), 2)
    A = dec.algebra
    t = dec.triples[0]
    with pytest.raises(RangeError):
        BilinearDecomposition(A, [Triple(t.a, A.zero(), t.c)], symmetric=True)


@pytest.mark.parametrize("q", [2, 3, 5])
def test_dual_numbers_in_rank_3(q):
    dec = build_truncated_interpolation_algorithm(prime_power(q))
    assert dec.rank == 3
    assert verify_decomposition(dec)


def test_serialization_keeps_a_verified_algorithm(tmp_path):
    dec = build_interpolation_algorithm(prime_power(4), 3)
    data = decomposition_to_dict(dec)
    assert data["verified"] is True
    assert data["rank"] == 5
    assert verify_decomposition(decomposition_from_dict(data))


def test_serialization_refuses_broken_algorithm():
    dec = build_interpolation_algorithm(prime_power(3), 2)
    broken = BilinearDecomposition(dec.algebra, dec.triples[:-1])
    with pytest.raises(RangeError):
        decomposition_to_dict(broken)
    assert decomposition_to_dict(broken, verified=False)["verified"] is False


def test_structure_tensor_of_f4():
    A = make_algebra(make_field(2, 1), 2, 1)
    M = structure_tensor(A)
    assert M.shape == (2, 2, 2)
    # x * x = x + 1 with modulus x^2 + x + 1
    assert np.array_equal(M[1, 1], np.array([1, 1], dtype=np.uint8))
    assert np.array_equal(M[0, 1], np.array([0, 1], dtype=np.uint8))


def test_brute_force_rank_2_is_not_enough_for_f4():
    assert brute_force_min_rank(prime_power(2), 2, 2) == NotFound(2)


def test_brute_force_finds_karatsuba():
    assert brute_force_min_rank(prime_power(2), 2, 3) == 3


def test_brute_force_trivial_extension():
    assert brute_force_min_rank(prime_power(2), 1, 1) == 1


def test_brute_force_over_f3():
    assert brute_force_min_rank(prime_power(3), 2, 3) == 3


def test_brute_force_budget():
    with pytest.raises(BudgetExceededError):
        brute_force_min_rank(prime_power(2), 3, 5)
    with pytest.raises(BudgetExceededError):
        brute_force_min_rank(prime_power(2), 2, 3, budget=10)


# --- generalized evaluation bound ---

def test_general_cc_exact_boundary(table):
    q = prime_power(7)
    budget = PlaceBudget(entries=[(1, 1, 11)], degree_caps={1: 11})
    assert general_cc_bound(q, 5, 1, 2, budget, True, table) == Fraction(11)


def test_general_cc_one_place_short(table):
    q = prime_power(7)
    budget = PlaceBudget(entries=[(1, 1, 10)], degree_caps={1: 10})
    assert isinstance(general_cc_bound(q, 5, 1, 2, budget, True, table), Inapplicable)


def test_general_cc_binary_needs_3e(table):
    q = prime_power(2)
    budget = PlaceBudget(entries=[(1, 1, 4), (2, 1, 4)])
    result = general_cc_bound(q, 4, 1, 2, budget, True, table)
    assert isinstance(result, Inapplicable)
    assert "15" in result.reason


def test_general_cc_rejects_small_genus(table):
    budget = PlaceBudget(entries=[(1, 1, 40)])
    assert isinstance(general_cc_bound(prime_power(7), 5, 1, 1, budget, True, table), Inapplicable)


def test_general_cc_respects_caps(table):
    budget = PlaceBudget(entries=[(1, 1, 12)], degree_caps={1: 11})
    assert isinstance(general_cc_bound(prime_power(7), 5, 1, 2, budget, True, table), Inapplicable)


def test_general_cc_monotone_in_counts(table):
    q = prime_power(7)
    previous = None
    for count in range(11, 20):
        value = general_cc_bound(q, 5, 1, 2, PlaceBudget(entries=[(1, 1, count)]), True, table)
        assert not isinstance(value, Inapplicable)
        if previous is not None:
            assert value >= previous
        previous = value


def test_general_cc_uses_multiplicity_entries(table):
    # 9 simple places plus one doubled place: 9*1 + 1*3
    q = prime_power(7)
    budget = PlaceBudget(entries=[(1, 1, 9), (1, 2, 1)], degree_caps={1: 10})
    assert general_cc_bound(q, 5, 1, 2, budget, True, table) == Fraction(12)


def test_place_test_is_sufficient_condition():
    assert has_place_of_degree(2, 6, 12)
    assert not has_place_of_degree(2, 6, 5)
    assert has_place_of_degree(7, 2, 5)
