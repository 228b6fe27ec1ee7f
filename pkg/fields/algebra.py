"""
Truncated extension algebras F_{q^m}[t]/(t^l).

An element is a vector of m*l elements of F_q. Entry b*m + a holds the
coefficient of x^a t^b, where x is the class of the variable modulo
ext_modulus. l = 1 gives the field F_{q^m} itself.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

from config import MAX_ALGEBRA_DIM
from errors import DimensionMismatchError, UnsupportedSizeError
from fields.finite_field import Element, FiniteField, smallest_irreducible
from fields.polynomial import Polynomial

Vector = Tuple[Element, ...]


@dataclass(frozen=True)
class ExtensionAlgebra:
    ground: FiniteField
    m: int
    l: int
    ext_modulus: Polynomial

    def __post_init__(self):
        if self.m < 1 or self.l < 1:
            raise UnsupportedSizeError("m and l must be positive")
        if self.m * self.l > MAX_ALGEBRA_DIM:
            raise UnsupportedSizeError(f"dimension {self.m * self.l} exceeds {MAX_ALGEBRA_DIM}")
        if self.ext_modulus.degree != self.m:
            raise UnsupportedSizeError("ext_modulus degree must equal m")

    @property
    def dim(self) -> int:
        return self.m * self.l

    @property
    def q(self) -> int:
        return self.ground.q

    def zero(self) -> Vector:
        return (self.ground.zero,) * self.dim

    def one(self) -> Vector:
        return self.basis(0)

    def basis(self, i: int) -> Vector:
        F = self.ground
        return tuple(F.one if j == i else F.zero for j in range(self.dim))

    def check(self, x: Sequence[Element]) -> None:
        if len(x) != self.dim:
            raise DimensionMismatchError(f"expected {self.dim} coordinates, got {len(x)}")

    def add(self, x: Vector, y: Vector) -> Vector:
        F = self.ground
        return tuple(F.add(a, b) for a, b in zip(x, y))

    def scale(self, c: Element, x: Vector) -> Vector:
        F = self.ground
        return tuple(F.mul(c, a) for a in x)

    # t-adic blocks

    def _blocks(self, x: Vector) -> List[Polynomial]:
        m = self.m
        return [Polynomial(self.ground, tuple(x[b * m:(b + 1) * m])) for b in range(self.l)]

    def _flatten(self, blocks: List[Polynomial]) -> Vector:
        out: List[Element] = []
        for poly in blocks:
            out.extend(poly.padded(self.m))
        return tuple(out)

    def mul(self, x: Vector, y: Vector) -> Vector:
        """Schoolbook product reduced mod ext_modulus and mod t^l."""
        self.check(x)
        self.check(y)
        xb, yb = self._blocks(x), self._blocks(y)
        out = [Polynomial.zero(self.ground) for _ in range(self.l)]
        for i, u in enumerate(xb):
            if u.is_zero:
                continue
            for j in range(self.l - i):
                if yb[j].is_zero:
                    continue
                out[i + j] = out[i + j] + u * yb[j]
        return self._flatten([poly % self.ext_modulus for poly in out])

    def from_polynomial(self, poly: Polynomial) -> Vector:
        """Image of a polynomial in x (t-degree 0)."""
        blocks = [poly % self.ext_modulus] + [Polynomial.zero(self.ground)] * (self.l - 1)
        return self._flatten(blocks)

    def to_ints(self, x: Vector) -> List[int]:
        return [self.ground.to_int(c) for c in x]

    def from_ints(self, values: Sequence[int]) -> Vector:
        vec = tuple(self.ground.from_int(v) for v in values)
        self.check(vec)
        return vec


@lru_cache(maxsize=None)
def make_algebra(ground: FiniteField, m: int, l: int = 1) -> ExtensionAlgebra:
    """F_{q^m}[t]/(t^l) with the lexicographically smallest degree-m modulus."""
    if m < 1 or l < 1:
        raise UnsupportedSizeError("m and l must be positive")
    if m * l > MAX_ALGEBRA_DIM:
        raise UnsupportedSizeError(f"dimension {m * l} exceeds {MAX_ALGEBRA_DIM}")
    modulus = smallest_irreducible(ground, m)
    return ExtensionAlgebra(ground, m, l, modulus)


def algebra_mul(A: ExtensionAlgebra, x: Sequence[Element], y: Sequence[Element]) -> Vector:
    return A.mul(tuple(x), tuple(y))
