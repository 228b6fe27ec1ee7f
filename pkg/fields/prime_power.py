"""
Prime powers and the small integer helpers every other module leans on.
"""

from dataclasses import dataclass
from math import isqrt
from typing import List, Tuple

from config import MAX_FIELD_SIZE
from errors import NonPrimeError, UnsupportedSizeError


def is_prime(n: int) -> bool:
    """Trial division; q is at most 2^32 so this stays cheap."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> List[int]:
    """Distinct prime divisors of n in ascending order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def divisors(n: int) -> List[int]:
    return [i for i in range(1, n + 1) if n % i == 0]


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


@dataclass(frozen=True)
class PrimePower:
    """q = p^r, validated on construction."""
    p: int
    r: int
    q: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise NonPrimeError(f"{self.p} is not prime")
        if self.r < 1:
            raise UnsupportedSizeError(f"exponent must be >= 1, got {self.r}")
        if self.p ** self.r != self.q:
            raise UnsupportedSizeError(f"q={self.q} is not {self.p}^{self.r}")
        if self.q > MAX_FIELD_SIZE:
            raise UnsupportedSizeError(f"q={self.q} exceeds the supported range 2^32")

    @property
    def is_square(self) -> bool:
        return self.r % 2 == 0

    @property
    def sqrt(self) -> "PrimePower":
        """Square root of q as a prime power; only valid when r is even."""
        if self.r % 2:
            raise UnsupportedSizeError(f"{self.q} is not a square")
        return PrimePower(self.p, self.r // 2, self.p ** (self.r // 2))

    def __str__(self) -> str:
        return str(self.q)


def make_prime_power(p: int, r: int = 1) -> PrimePower:
    if not is_prime(p):
        raise NonPrimeError(f"{p} is not prime")
    if r < 1:
        raise UnsupportedSizeError(f"exponent must be >= 1, got {r}")
    if p ** r > MAX_FIELD_SIZE:
        raise UnsupportedSizeError(f"{p}^{r} exceeds the supported range 2^32")
    return PrimePower(p, r, p ** r)


def factor_prime_power(q: int) -> Tuple[int, int]:
    """Split q into (p, r). Raises NonPrimeError when q is not a prime power."""
    if q < 2:
        raise NonPrimeError(f"{q} is not a prime power")
    if q > MAX_FIELD_SIZE:
        raise UnsupportedSizeError(f"q={q} exceeds the supported range 2^32")
    primes = prime_factors(q)
    if len(primes) != 1:
        raise NonPrimeError(f"{q} is not a prime power")
    p = primes[0]
    r = 0
    while q > 1:
        q //= p
        r += 1
    return p, r


def prime_power(q: int) -> PrimePower:
    """Parse an integer q into a PrimePower."""
    p, r = factor_prime_power(q)
    return PrimePower(p, r, q)
