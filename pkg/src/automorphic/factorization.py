"""Factor a radix into its distinct prime powers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, UnsupportedBaseError

DEFAULT_BASE_CEILING = 2**32


@dataclass(frozen=True)
class Factorization:
    base: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent), primes ascending

    @property
    def m(self) -> int:
        """Number of distinct prime factors."""
        return len(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def is_prime(k: int) -> bool:
    if k < 2:
        return False
    if k % 2 == 0:
        return k == 2
    d = 3
    while d * d <= k:
        if k % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=1024)
def factor_base(base: int, ceiling: int = DEFAULT_BASE_CEILING) -> Factorization:
    """Trial-divide ``base`` by 2, then by odd candidates up to its square root."""
    if base < 2:
        raise DomainError(f"base must be >= 2, got {base}")
    if base > ceiling:
        raise UnsupportedBaseError(f"base {base} exceeds the ceiling {ceiling}")
    factors = []
    rest = base
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(base, tuple(factors))


def prime_power_moduli(f: Factorization, n: int) -> list[int]:
    """The pairwise-coprime moduli ``p_i ** (n * e_i)`` whose product is ``base ** n``."""
    if n < 1:
        raise DomainError(f"width n must be >= 1, got {n}")
    return [p ** (n * e) for p, e in f.factors]
