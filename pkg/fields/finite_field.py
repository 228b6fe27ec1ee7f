"""
F_q = F_p[x]/(modulus) with elements as coefficient vectors over F_p.

Every element is a tuple of r integers in [0, p), constant term first.
The canonical order on elements is the integer code sum(c_i * p^i); it
fixes evaluation-point order and the lexicographic modulus search.

Fields with q <= FIELD_LOOKUP_MAX answer add, sub, mul, neg and inv from
dicts built once out of the numpy operation tables.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from config import FIELD_LOOKUP_MAX, FIELD_TABLE_MAX
from errors import UnsupportedSizeError
from fields.polynomial import Polynomial, poly_gcd, poly_powmod
from fields.prime_power import PrimePower, make_prime_power

logger = logging.getLogger(__name__)

Element = Tuple[int, ...]
Pair = Tuple[Element, Element]


@dataclass(frozen=True)
class OperationLookup:
    add: Dict[Pair, Element]
    sub: Dict[Pair, Element]
    mul: Dict[Pair, Element]
    neg: Dict[Element, Element]
    inv: Dict[Element, Element]


@dataclass(frozen=True)
class FiniteField:
    """FieldDesc: the base prime power plus a monic irreducible modulus over F_p."""
    base: PrimePower
    modulus: Tuple[int, ...]  # degree r, constant term first, monic
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def p(self) -> int:
        return self.base.p

    @property
    def r(self) -> int:
        return self.base.r

    @property
    def q(self) -> int:
        return self.base.q

    @cached_property
    def zero(self) -> Element:
        return (0,) * self.r

    @cached_property
    def one(self) -> Element:
        return (1,) + (0,) * (self.r - 1)

    # encoding

    def to_int(self, a: Element) -> int:
        v = 0
        for c in reversed(a):
            v = v * self.p + c
        return v

    def from_int(self, v: int) -> Element:
        out = []
        for _ in range(self.r):
            v, c = divmod(v, self.p)
            out.append(c)
        return tuple(out)

    def elements(self) -> Iterator[Element]:
        """All q elements in ascending canonical order."""
        for v in range(self.q):
            yield self.from_int(v)

    # arithmetic

    def add(self, a: Element, b: Element) -> Element:
        ops = self._lookup
        if ops is not None:
            return ops.add[a, b]
        return self._raw_add(a, b)

    def sub(self, a: Element, b: Element) -> Element:
        ops = self._lookup
        if ops is not None:
            return ops.sub[a, b]
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a: Element) -> Element:
        ops = self._lookup
        if ops is not None:
            return ops.neg[a]
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a: Element, b: Element) -> Element:
        ops = self._lookup
        if ops is not None:
            return ops.mul[a, b]
        return self._raw_mul(a, b)

    def pow(self, a: Element, e: int) -> Element:
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: Element) -> Element:
        if a == self.zero:
            raise ZeroDivisionError("inverse of zero")
        ops = self._lookup
        if ops is not None:
            return ops.inv[a]
        return self.pow(a, self.q - 2)

    def scalar(self, c: int) -> Element:
        """Image of the integer c in F_p inside F_q."""
        return ((c % self.p),) + (0,) * (self.r - 1)

    def _raw_add(self, a: Element, b: Element) -> Element:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _raw_mul(self, a: Element, b: Element) -> Element:
        p, r = self.p, self.r
        if r == 1:
            return ((a[0] * b[0]) % p,)
        prod = [0] * (2 * r - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        # reduce by the monic modulus from the top
        mod = self.modulus
        for i in range(2 * r - 2, r - 1, -1):
            c = prod[i] % p
            if c:
                for j in range(r):
                    prod[i - r + j] -= c * mod[j]
        return tuple(v % p for v in prod[:r])

    def tables(self):
        """(add, mul) tables over the integer codes; only for q <= FIELD_TABLE_MAX."""
        key = "tables"
        if key not in self._cache:
            q = self.q
            if q > FIELD_TABLE_MAX:
                raise UnsupportedSizeError(f"operation tables are only built for q <= {FIELD_TABLE_MAX}")
            elems = list(self.elements())
            add = np.zeros((q, q), dtype=np.uint8)
            mul = np.zeros((q, q), dtype=np.uint8)
            for i, a in enumerate(elems):
                for j, b in enumerate(elems[i:], start=i):
                    add[i, j] = add[j, i] = self.to_int(self._raw_add(a, b))
                    mul[i, j] = mul[j, i] = self.to_int(self._raw_mul(a, b))
            self._cache[key] = (add, mul)
        return self._cache[key]

    @cached_property
    def _lookup(self) -> Optional[OperationLookup]:
        if self.q > FIELD_LOOKUP_MAX:
            return None
        add, mul = self.tables()
        elems = list(self.elements())
        # each row of the add table holds exactly one zero, each nonzero row of mul one 1
        neg_idx = np.argmax(add == 0, axis=1)
        sub = add[:, neg_idx]
        inv_idx = np.argmax(mul == 1, axis=1)
        pairs = [(a, b) for a in elems for b in elems]

        def as_dict(tbl: np.ndarray) -> Dict[Pair, Element]:
            return dict(zip(pairs, (elems[c] for c in tbl.ravel())))

        logger.debug(f"🔍 F_{self.q} lookup tables built")
        return OperationLookup(
            add=as_dict(add),
            sub=as_dict(sub),
            mul=as_dict(mul),
            neg={a: elems[neg_idx[i]] for i, a in enumerate(elems)},
            inv={a: elems[inv_idx[i]] for i, a in enumerate(elems) if i},
        )

    def __str__(self) -> str:
        return f"F_{self.q}"


@lru_cache(maxsize=None)
def _prime_field(p: int) -> FiniteField:
    return FiniteField(make_prime_power(p, 1), (0, 1))


def _has_root(f: Polynomial) -> bool:
    zero = f.field.zero
    return any(f.evaluate(a) == zero for a in f.field.elements())


def is_irreducible(f: Polynomial) -> bool:
    """
    Ben-Or's test over the coefficient field of f (size Q, degree m):
    gcd(x^(Q^i) - x, f) = 1 for every i <= m/2.

    Small coefficient fields settle i = 1 by a root search, which alone
    decides degrees 2 and 3.
    """
    m = f.degree
    if m < 1:
        return False
    if m == 1:
        return True
    field_ = f.field
    Q = field_.q
    x = Polynomial.x(field_)
    first = 1
    if Q <= FIELD_LOOKUP_MAX:
        if _has_root(f):
            return False
        if m <= 3:
            return True
        first = 2
    frob = x % f
    for i in range(1, m // 2 + 1):
        frob = poly_powmod(frob, Q, f)
        if i >= first and poly_gcd(frob - x, f).degree != 0:
            return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(field_: FiniteField, degree: int) -> Polynomial:
    """
    Lexicographically smallest monic irreducible of the given degree over field_.

    Candidates x^degree + sum c_i x^i are visited by ascending
    sum code(c_i) * Q^i, so the result is reproducible across runs.
    """
    Q = field_.q
    for code in range(Q ** degree):
        if degree > 1 and code % Q == 0:
            continue  # x divides the candidate
        low = []
        v = code
        for _ in range(degree):
            v, c = divmod(v, Q)
            low.append(field_.from_int(c))
        cand = Polynomial(field_, tuple(low) + (field_.one,))
        if is_irreducible(cand):
            return cand
    raise UnsupportedSizeError(f"no irreducible of degree {degree} found over F_{Q}")


@lru_cache(maxsize=None)
def make_field(p: int, r: int = 1) -> FiniteField:
    """
    Build F_{p^r} with the lexicographically smallest monic irreducible modulus.

    (2, 1) gives modulus x, (2, 2) gives x^2 + x + 1.
    """
    base = make_prime_power(p, r)
    if r == 1:
        return _prime_field(p)
    modulus = smallest_irreducible(_prime_field(p), r)
    logger.debug(f"🔍 F_{base.q} modulus {modulus!r}")
    return FiniteField(base, tuple(c[0] for c in modulus.coeffs))


def field_for(q: PrimePower) -> FiniteField:
    return make_field(q.p, q.r)


def elements_ascending(field_: FiniteField, count: int) -> List[Element]:
    """First `count` elements in canonical order."""
    return [field_.from_int(v) for v in range(count)]
