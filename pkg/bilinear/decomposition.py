"""
Bilinear multiplication algorithms as explicit tensor decompositions.

A decomposition of rank lambda is a list of triples (a_l, b_l, c_l) with
x*y = sum_l a_l(x) b_l(y) c_l for all x, y in the algebra. Linear forms
are stored as their coefficient vectors over F_q.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List

from errors import DimensionMismatchError, RangeError
from fields.algebra import ExtensionAlgebra, Vector, make_algebra
from fields.finite_field import field_for
from fields.prime_power import prime_power

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Triple:
    a: Vector
    b: Vector
    c: Vector


@dataclass
class BilinearDecomposition:
    algebra: ExtensionAlgebra
    triples: List[Triple] = field(default_factory=list)
    symmetric: bool = False

    def __post_init__(self):
        if self.symmetric and any(t.a != t.b for t in self.triples):
            raise RangeError("symmetric decomposition requires a_l = b_l for every triple")

    @property
    def rank(self) -> int:
        return len(self.triples)

    def evaluate(self, x: Vector, y: Vector) -> Vector:
        """sum_l a_l(x) b_l(y) c_l."""
        A = self.algebra
        F = A.ground
        acc = A.zero()
        for t in self.triples:
            ax = F.zero
            for coef, xi in zip(t.a, x):
                ax = F.add(ax, F.mul(coef, xi))
            by = F.zero
            for coef, yi in zip(t.b, y):
                by = F.add(by, F.mul(coef, yi))
            w = F.mul(ax, by)
            if w != F.zero:
                acc = A.add(acc, A.scale(w, t.c))
        return acc


def _well_formed(dec: BilinearDecomposition) -> bool:
    N = dec.algebra.dim
    return all(len(t.a) == N and len(t.b) == N and len(t.c) == N for t in dec.triples)


def verify_decomposition(dec: BilinearDecomposition) -> bool:
    """
    True iff the decomposition reproduces the algebra's multiplication.

    By bilinearity the N^2 basis pairs suffice: a_l(e_i) is simply a_l[i].
    """
    if not _well_formed(dec):
        return False
    A = dec.algebra
    F = A.ground
    N = A.dim
    for i in range(N):
        ei = A.basis(i)
        for j in range(N):
            expected = A.mul(ei, A.basis(j))
            acc = A.zero()
            for t in dec.triples:
                w = F.mul(t.a[i], t.b[j])
                if w != F.zero:
                    acc = A.add(acc, A.scale(w, t.c))
            if acc != expected:
                logger.debug(f"❌ basis pair ({i},{j}) mismatch")
                return False
    return True


def rescale_triple(dec: BilinearDecomposition, index: int, s) -> BilinearDecomposition:
    """Multiply a_index by s and c_index by s^-1 (leaves the product unchanged)."""
    A = dec.algebra
    F = A.ground
    t = dec.triples[index]
    new = Triple(A.scale(s, t.a), t.b, A.scale(F.inv(s), t.c))
    triples = list(dec.triples)
    triples[index] = new
    return BilinearDecomposition(A, triples, symmetric=False)


# --- Serialization ---

def decomposition_to_dict(dec: BilinearDecomposition, verified: bool = True) -> Dict[str, Any]:
    """JSON-ready dict; verified=True refuses to serialize a decomposition that fails."""
    if verified and not verify_decomposition(dec):
        raise RangeError("decomposition does not verify; refusing to mark it verified")
    A = dec.algebra
    return {
        "q": A.q,
        "n": A.m,
        "l": A.l,
        "rank": dec.rank,
        "symmetric": dec.symmetric,
        "verified": bool(verified),
        "triples": [
            {"a": A.to_ints(t.a), "b": A.to_ints(t.b), "c": A.to_ints(t.c)}
            for t in dec.triples
        ],
    }


def decomposition_from_dict(data: Dict[str, Any]) -> BilinearDecomposition:
    q = prime_power(int(data["q"]))
    A = make_algebra(field_for(q), int(data["n"]), int(data.get("l", 1)))
    triples = []
    for item in data["triples"]:
        vecs = [tuple(A.ground.from_int(v) for v in item[k]) for k in ("a", "b", "c")]
        if any(len(v) != A.dim for v in vecs):
            raise DimensionMismatchError(f"triple vector length differs from dimension {A.dim}")
        triples.append(Triple(*vecs))
    dec = BilinearDecomposition(A, triples, symmetric=bool(data.get("symmetric", False)))
    if int(data.get("rank", dec.rank)) != dec.rank:
        raise DimensionMismatchError("rank field disagrees with the number of triples")
    return dec
