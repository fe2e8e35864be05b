"""Arbitrary-precision modular arithmetic primitives.

Everything here works on Python ints, so there is no overflow at any size.
Residues are returned as plain ints in the canonical range ``[0, modulus)``.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from math import gcd

from .errors import DomainError, NotInvertibleError


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid.

    Returns ``(g, u, v)`` with ``g = gcd(a, b) >= 0`` and ``u*a + v*b == g``.
    """
    if a == 0 and b == 0:
        raise DomainError("ext_gcd is undefined for a = b = 0")
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """Right-to-left square-and-multiply; O(log exponent) multiplications."""
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    if exponent < 0:
        raise DomainError(f"exponent must be non-negative, got {exponent}")
    result = 1
    b = base % modulus
    e = exponent
    while e:
        if e & 1:
            result = result * b % modulus
        b = b * b % modulus
        e >>= 1
    return result % modulus


def mod_inverse(a: int, modulus: int) -> int:
    """Return the unique ``w`` in ``[0, modulus)`` with ``a*w = 1 (mod modulus)``.

    Raises:
        NotInvertibleError: if ``gcd(a, modulus) != 1``; the gcd is attached.
    """
    if modulus < 2:
        raise DomainError(f"modulus must be >= 2, got {modulus}")
    g, u, _ = ext_gcd(a % modulus, modulus)
    if g != 1:
        raise NotInvertibleError(a, modulus, g)
    return u % modulus


@dataclass(frozen=True)
class CongruenceSystem:
    """Simultaneous congruences ``x = residue (mod modulus)``, moduli pairwise coprime.

    Residues are reduced on construction.
    """

    entries: tuple[tuple[int, int], ...]

    def __init__(self, entries: Iterable[tuple[int, int]]):
        normalized = []
        for residue, modulus in entries:
            if modulus < 2:
                raise DomainError(f"modulus must be >= 2, got {modulus}")
            normalized.append((residue % modulus, modulus))
        if not normalized:
            raise DomainError("a congruence system needs at least one entry")
        for i in range(len(normalized)):
            for j in range(i + 1, len(normalized)):
                mi, mj = normalized[i][1], normalized[j][1]
                g = gcd(mi, mj)
                if g != 1:
                    raise DomainError(
                        f"moduli {mi} (entry {i}) and {mj} (entry {j}) share factor {g}"
                    )
        object.__setattr__(self, "entries", tuple(normalized))

    @property
    def modulus(self) -> int:
        prod = 1
        for _, m in self.entries:
            prod *= m
        return prod


def crt_combine(system: CongruenceSystem | Iterable[tuple[int, int]]) -> int:
    """Solve a coprime congruence system; result lies in ``[0, prod(moduli))``.

    Entries are folded left to right, reducing after each step.
    """
    if not isinstance(system, CongruenceSystem):
        system = CongruenceSystem(system)
    x, m_acc = 0, 1
    for r, m in system.entries:
        # x + m_acc*t = r (mod m)  =>  t = (r - x) * m_acc^-1 (mod m)
        t = (r - x) * mod_inverse(m_acc, m) % m
        x += m_acc * t
        m_acc *= m
        x %= m_acc
    return x
