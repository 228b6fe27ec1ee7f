"""
Exact genus formulas for the two base towers.
"""

from typing import Dict, Tuple, Union

from errors import InvalidStepError
from fields.prime_power import PrimePower

# Intermediate GS genera known exactly for q_t = 4: (k, s) -> g_{k,s}
SMALL_EXACT_GENERA: Dict[int, Dict[Tuple[int, int], int]] = {
    4: {(1, 1): 2, (2, 1): 23},
}


def _as_int(q: Union[int, PrimePower]) -> int:
    return q.q if isinstance(q, PrimePower) else int(q)


def gs_genus(q: Union[int, PrimePower], k: int) -> int:
    """
    Genus of level k of the Garcia-Stichtenoth tower over F_{q^2}.

    k odd:  q^k + q^(k-1) - q^((k+1)/2) - 2 q^((k-1)/2) + 1
    k even: q^k + q^(k-1) - q^(k/2+1)/2 - 3 q^(k/2)/2 - q^(k/2-1) + 1
    """
    if k < 1:
        raise InvalidStepError(f"GS levels start at k=1, got {k}")
    q = _as_int(q)
    if k % 2:
        return q ** k + q ** (k - 1) - q ** ((k + 1) // 2) - 2 * q ** ((k - 1) // 2) + 1
    h = k // 2
    twice = 2 * q ** k + 2 * q ** (k - 1) - q ** (h + 1) - 3 * q ** h - 2 * q ** (h - 1) + 2
    return twice // 2


def kummer_genus(k: int) -> int:
    """
    Genus of L_k in the tower y^2 = (x^2+1)/2x.

    k even: 2^(k+1) - 3 * 2^(k/2) + 1
    k odd:  2^(k+1) - 2 * 2^((k+1)/2) + 1
    """
    if k < 0:
        raise InvalidStepError(f"Kummer levels start at k=0, got {k}")
    if k % 2 == 0:
        return 2 ** (k + 1) - 3 * 2 ** (k // 2) + 1
    return 2 ** (k + 1) - 2 * 2 ** ((k + 1) // 2) + 1
