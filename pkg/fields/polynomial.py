"""
Dense univariate polynomials over a FiniteField, constant term first.

The zero polynomial has an empty coefficient tuple and degree -1.
"""

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from errors import CountMismatchError, DuplicatePointError

Element = Tuple[int, ...]


@dataclass(frozen=True)
class Polynomial:
    field: "object"
    coeffs: Tuple[Element, ...]

    def __post_init__(self):
        coeffs = list(self.coeffs)
        zero = self.field.zero
        while coeffs and coeffs[-1] == zero:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    # construction helpers

    @classmethod
    def zero(cls, field) -> "Polynomial":
        return cls(field, ())

    @classmethod
    def constant(cls, field, c: Element) -> "Polynomial":
        return cls(field, (c,))

    @classmethod
    def x(cls, field) -> "Polynomial":
        return cls(field, (field.zero, field.one))

    @classmethod
    def from_ints(cls, field, values: Iterable[int]) -> "Polynomial":
        return cls(field, tuple(field.from_int(v) for v in values))

    # basic properties

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Element:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, i: int) -> Element:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def padded(self, length: int) -> Tuple[Element, ...]:
        """Coefficient vector of exactly `length` entries (degree must fit)."""
        return tuple(self.coeff(i) for i in range(length))

    # arithmetic

    def __add__(self, other: "Polynomial") -> "Polynomial":
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(f, tuple(f.add(self.coeff(i), other.coeff(i)) for i in range(n)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.field, tuple(self.field.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        f = self.field
        if self.is_zero or other.is_zero:
            return Polynomial.zero(f)
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == f.zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Polynomial(f, tuple(out))

    def scale(self, c: Element) -> "Polynomial":
        f = self.field
        return Polynomial(f, tuple(f.mul(c, a) for a in self.coeffs))

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return Polynomial(self.field, (self.field.zero,) * k + self.coeffs)

    def divmod(self, divisor: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        f = self.field
        if divisor.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        inv_lead = f.inv(divisor.leading)
        if len(rem) - 1 < dd:
            return Polynomial.zero(f), self
        quot = [f.zero] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == f.zero:
                continue
            factor = f.mul(c, inv_lead)
            quot[i - dd] = factor
            for j, b in enumerate(divisor.coeffs):
                rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(factor, b))
        return Polynomial(f, tuple(quot)), Polynomial(f, tuple(rem[:dd]))

    def __mod__(self, divisor: "Polynomial") -> "Polynomial":
        return self.divmod(divisor)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(self.field.inv(self.leading))

    def evaluate(self, x: Element) -> Element:
        """Horner evaluation."""
        f = self.field
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def to_ints(self) -> List[int]:
        return [self.field.to_int(c) for c in self.coeffs]

    def __repr__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            v = self.field.to_int(c)
            if v == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if not mono:
                terms.append(str(v))
            else:
                terms.append(mono if v == 1 else f"{v}*{mono}")
        return " + ".join(reversed(terms))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd (zero if both are zero)."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_powmod(base: Polynomial, exponent: int, modulus: Polynomial) -> Polynomial:
    result = Polynomial.constant(base.field, base.field.one) % modulus
    base = base % modulus
    while exponent:
        if exponent & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        exponent >>= 1
    return result


def product_of_linear_factors(field, roots: Sequence[Element]) -> Polynomial:
    """prod (x - r) over the given roots."""
    acc = Polynomial.constant(field, field.one)
    for r in roots:
        acc = acc * Polynomial(field, (field.neg(r), field.one))
    return acc


def interpolate(field, points: Sequence[Tuple[Element, Element]],
                at_infinity: Optional[Element], target_degree: int) -> Polynomial:
    """
    Unique polynomial of degree <= target_degree through the finite points.

    When at_infinity is given it fixes the coefficient of x^target_degree,
    so one fewer finite point is needed.
    """
    xs = [x for x, _ in points]
    if len(set(xs)) != len(xs):
        raise DuplicatePointError("interpolation abscissae must be pairwise distinct")
    needed = target_degree + 1
    have = len(points) + (1 if at_infinity is not None else 0)
    if have != needed:
        raise CountMismatchError(f"{have} conditions supplied for degree {target_degree} (need {needed})")

    # Lagrange part through the finite values
    lagrange = Polynomial.zero(field)
    for i, (xi, yi) in enumerate(points):
        if yi == field.zero:
            continue
        others = [xj for j, xj in enumerate(xs) if j != i]
        basis = product_of_linear_factors(field, others)
        denom = basis.evaluate(xi)
        lagrange = lagrange + basis.scale(field.mul(yi, field.inv(denom)))

    if at_infinity is None:
        return lagrange
    # b * prod(x - x_i) vanishes on every finite point and carries the leading term
    return lagrange + product_of_linear_factors(field, xs).scale(at_infinity)
