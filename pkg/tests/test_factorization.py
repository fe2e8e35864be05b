from math import gcd

import pytest

from automorphic.errors import DomainError, UnsupportedBaseError
from automorphic.factorization import factor_base, is_prime, prime_power_moduli


def oracle_factor(n):
    """Divide out primes from a sieve; independent of the trial-division code."""
    limit = int(n**0.5) + 2
    sieve = [True] * (limit + 1)
    out = []
    for p in range(2, limit + 1):
        if not sieve[p]:
            continue
        for q in range(p * p, limit + 1, p):
            sieve[q] = False
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            out.append((p, e))
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def test_examples():
    assert factor_base(10).factors == ((2, 1), (5, 1))
    assert factor_base(10).m == 2
    assert factor_base(8).factors == ((2, 3),)
    assert factor_base(30).factors == ((2, 1), (3, 1), (5, 1))
    assert factor_base(30).m == 3


@pytest.mark.parametrize("base", list(range(2, 1001)) + [2**32, 2**32 - 1, 4294967291, 65521 * 65519])
def test_matches_oracle(base):
    f = factor_base(base)
    assert f.factors == oracle_factor(base)
    assert all(is_prime(p) for p in f.primes)
    assert list(f.primes) == sorted(set(f.primes))


def test_errors():
    with pytest.raises(DomainError):
        factor_base(1)
    with pytest.raises(UnsupportedBaseError):
        factor_base(2**32 + 1)
    assert factor_base(2**33, ceiling=2**40).factors == ((2, 33),)


def test_moduli_examples():
    assert prime_power_moduli(factor_base(10), 4) == [16, 625]
    assert prime_power_moduli(factor_base(8), 1) == [8]
    assert prime_power_moduli(factor_base(12), 2) == [16, 9]
    with pytest.raises(DomainError):
        prime_power_moduli(factor_base(12), 0)


def test_moduli_product_and_coprimality():
    for base in range(2, 101):
        f = factor_base(base)
        for n in range(1, 9):
            ms = prime_power_moduli(f, n)
            prod = 1
            for q in ms:
                prod *= q
            assert prod == base**n
            assert all(gcd(a, b) == 1 for i, a in enumerate(ms) for b in ms[i + 1:])


def test_refactoring_is_stable():
    for base in range(2, 500):
        f = factor_base(base)
        rebuilt = 1
        for p, e in f.factors:
            rebuilt *= p**e
        assert rebuilt == base
        assert factor_base(rebuilt) == f
