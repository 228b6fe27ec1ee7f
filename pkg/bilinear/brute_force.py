"""
Exhaustive tensor-rank search for tiny extensions (q = 2, 3 and n <= 3).

Rank-one tensors a x b x c are enumerated with a and b normalised (first
nonzero coordinate equal to 1) and c arbitrary nonzero, which covers every
rank-one tensor once up to the scalar moved onto c. Sums of at most k
rank-one tensors are grown level by level, and rank <= lambda is decided by
meeting in the middle: M - X in S_floor(lambda/2) for some X in
S_ceil(lambda/2).
"""

import logging
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Dict, List, Set, Union

import numpy as np

import config
from errors import BudgetExceededError, RangeError
from fields.algebra import ExtensionAlgebra, make_algebra
from fields.finite_field import field_for
from fields.prime_power import PrimePower

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NotFound:
    """No decomposition of rank <= searched_up_to exists."""
    searched_up_to: int

    def __str__(self) -> str:
        return f"NotFound (rank > {self.searched_up_to})"


def structure_tensor(A: ExtensionAlgebra) -> np.ndarray:
    """M[i, j, k] = integer code of the k-th coordinate of e_i * e_j."""
    N = A.dim
    M = np.zeros((N, N, N), dtype=np.uint8)
    for i in range(N):
        ei = A.basis(i)
        for j in range(N):
            prod = A.mul(ei, A.basis(j))
            M[i, j, :] = [A.ground.to_int(c) for c in prod]
    return M


def _normalised_vectors(q: int, N: int) -> np.ndarray:
    """Nonzero vectors of F_q^N whose first nonzero coordinate is 1."""
    out = []
    for vec in product(range(q), repeat=N):
        nz = next((v for v in vec if v), None)
        if nz == 1:
            out.append(vec)
    return np.array(out, dtype=np.uint8)


def _nonzero_vectors(q: int, N: int) -> np.ndarray:
    return np.array([v for v in product(range(q), repeat=N) if any(v)], dtype=np.uint8)


def rank_one_tensors(q: PrimePower, N: int) -> np.ndarray:
    """All distinct normalised rank-one tensors, one flattened row each."""
    add, mul = field_for(q).tables()
    left = _normalised_vectors(q.q, N)
    right = _nonzero_vectors(q.q, N)
    rows: Dict[bytes, np.ndarray] = {}
    for a in left:
        for b in left:
            ab = mul[a[:, None], b[None, :]]
            for c in right:
                t = mul[ab[:, :, None], c[None, None, :]].reshape(-1)
                rows.setdefault(t.tobytes(), t)
    return np.array(list(rows.values()), dtype=np.uint8)


def search_size(num_rank_one: int, rank_cap: int) -> int:
    """Multisets of size <= ceil(cap/2) drawn from the rank-one tensors."""
    half = (rank_cap + 1) // 2
    return sum(comb(num_rank_one + k - 1, k) for k in range(1, half + 1))


def brute_force_min_rank(q: PrimePower, n: int, rank_cap: int,
                         budget: int = None) -> Union[int, NotFound]:
    if n < 1 or rank_cap < 1:
        raise RangeError("n and rank_cap must be positive")
    budget = config.BRUTE_FORCE_BUDGET if budget is None else budget
    # normalised (a, b) pairs times nonzero c bounds the distinct rank-one count
    lines = (q.q ** n - 1) // (q.q - 1)
    candidates = lines * lines * (q.q ** n - 1)
    estimate = search_size(candidates, rank_cap)
    if estimate > budget:
        raise BudgetExceededError(
            f"search over {candidates} rank-one tensors up to rank {rank_cap} "
            f"needs ~{estimate} combinations (budget {budget})")

    A = make_algebra(field_for(q), n, 1)
    add, _ = field_for(q).tables()
    neg = np.argmax(add == 0, axis=1).astype(np.uint8)
    R = rank_one_tensors(q, n)
    logger.info(f"🔍 brute force q={q.q} n={n}: {len(R)} rank-one tensors, estimate {estimate}")

    target = structure_tensor(A).reshape(-1)
    zero = np.zeros_like(target)

    # levels[k] holds every tensor expressible as a sum of at most k rank-one terms
    levels: List[Set[bytes]] = [{zero.tobytes()}]
    arrays: List[np.ndarray] = [zero[None, :]]
    frontier = zero[None, :]

    def grow() -> None:
        nonlocal frontier
        sums = add[frontier[:, None, :], R[None, :, :]].reshape(-1, target.size)
        seen = set(levels[-1])
        fresh: Dict[bytes, np.ndarray] = {}
        for row in sums:
            key = row.tobytes()
            if key not in seen and key not in fresh:
                fresh[key] = row
        new_rows = np.array(list(fresh.values()), dtype=np.uint8).reshape(-1, target.size)
        levels.append(seen | set(fresh))
        arrays.append(np.concatenate([arrays[-1], new_rows]) if len(new_rows) else arrays[-1])
        frontier = new_rows if len(new_rows) else frontier[:0]
        logger.debug(f"🔍 level {len(levels) - 1}: {len(levels[-1])} tensors")

    for lam in range(1, rank_cap + 1):
        hi = (lam + 1) // 2
        lo = lam // 2
        while len(levels) <= hi:
            grow()
        # M - X for every X with at most `hi` terms
        diffs = add[target[None, :], neg[arrays[hi]]]
        lo_set = levels[lo]
        if any(row.tobytes() in lo_set for row in diffs):
            logger.info(f"✅ minimal rank {lam} for q={q.q}, n={n}")
            return lam

    logger.info(f"⚠️ no decomposition of rank <= {rank_cap} for q={q.q}, n={n}")
    return NotFound(rank_cap)
