"""Idempotents modulo B**n, enumerated one selector class at a time.

A selector tuple ``t`` in ``{0,1}**m`` picks ``x = t[i] (mod p_i**(n*e_i))``
for each prime power of the base (ascending primes). Each tuple has a
unique CRT solution below ``B**n``, and the solutions of all ``2**m`` tuples
are exactly the idempotents.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import DomainError, InvariantViolation, OracleTooLargeError
from .factorization import Factorization, factor_base, prime_power_moduli
from .modular import crt_combine, mod_pow
from .radix import render_digits, to_digits

DEFAULT_ORACLE_CEILING = 10**7

SelectorTuple = tuple[int, ...]


@dataclass(frozen=True)
class IdempotentSolution:
    base: int
    width: int
    residue: int
    selector: SelectorTuple
    digits: tuple[int, ...]  # most significant first, zero padded to ``width``

    def __post_init__(self):
        modulus = self.base**self.width
        if not 0 <= self.residue < modulus:
            raise InvariantViolation(f"residue {self.residue} outside [0, {modulus})")
        if (self.residue * self.residue - self.residue) % modulus:
            raise InvariantViolation(f"{self.residue} is not idempotent mod {modulus}")

    @property
    def modulus(self) -> int:
        return self.base**self.width

    @property
    def is_trivial(self) -> bool:
        return len(set(self.selector)) == 1

    @property
    def text(self) -> str:
        return render_digits(self.digits, self.base)


@dataclass(frozen=True)
class TwinPair:
    r: IdempotentSolution
    s: IdempotentSolution

    def __post_init__(self):
        if self.r.is_trivial or self.s.is_trivial:
            raise DomainError("twins must both be nontrivial")
        if any(a + b != 1 for a, b in zip(self.r.selector, self.s.selector)):
            raise DomainError(f"selectors {self.r.selector} and {self.s.selector} are not complements")
        if self.r.residue + self.s.residue != self.r.modulus + 1:
            raise InvariantViolation(
                f"twin sum {self.r.residue} + {self.s.residue} != {self.r.modulus} + 1"
            )


def _check_selector(f: Factorization, t: Sequence[int]) -> SelectorTuple:
    t = tuple(t)
    if len(t) != f.m:
        raise DomainError(f"selector length {len(t)} does not match m={f.m} for base {f.base}")
    if any(bit not in (0, 1) for bit in t):
        raise DomainError(f"selector bits must be 0 or 1, got {t}")
    return t


def solve_selector(f: Factorization, n: int, t: Sequence[int]) -> IdempotentSolution:
    """The unique idempotent below ``B**n`` in selector class ``t``."""
    t = _check_selector(f, t)
    moduli = prime_power_moduli(f, n)
    residue = crt_combine(zip(t, moduli))
    digits = to_digits(residue, f.base, n).digits
    return IdempotentSolution(f.base, n, residue, t, digits)


def selectors(m: int) -> list[SelectorTuple]:
    return list(itertools.product((0, 1), repeat=m))


def enumerate_idempotents(base: int, n: int, include_trivial: bool = False) -> list[IdempotentSolution]:
    """All idempotents mod ``base**n`` sorted by residue.

    There are ``2**m`` of them, or ``2**m - 2`` once 0 and 1 are dropped.
    """
    f = factor_base(base)
    sols = [solve_selector(f, n, t) for t in selectors(f.m)]
    if not include_trivial:
        sols = [s for s in sols if not s.is_trivial]
    return sorted(sols, key=lambda s: s.residue)


def twin_of(sol: IdempotentSolution) -> IdempotentSolution:
    if sol.is_trivial:
        raise DomainError(f"{sol.residue} is a trivial idempotent and has no twin")
    f = factor_base(sol.base)
    twin = solve_selector(f, sol.width, tuple(1 - b for b in sol.selector))
    if sol.residue + twin.residue != sol.modulus + 1:
        raise InvariantViolation(f"twin sum for {sol.residue} is not {sol.modulus + 1}")
    return twin


def twin_pairs(base: int, n: int) -> list[TwinPair]:
    """Nontrivial twin pairs, ``r`` being the member whose first selector bit is 1.

    Pairs come in lexicographic order of ``r.selector``; for base 10 the single
    pair is ``(r_n, s_n)`` with ``r_n = 1 (mod 2**n)``.
    """
    f = factor_base(base)
    pairs = []
    for t in selectors(f.m):
        if t[0] != 1 or all(t):
            continue
        r = solve_selector(f, n, t)
        pairs.append(TwinPair(r, twin_of(r)))
    return pairs


def extend_solution(sol: IdempotentSolution, n_new: int) -> IdempotentSolution:
    """Same selector class at a larger width; left-pads digits onto ``sol``."""
    if n_new <= sol.width:
        raise DomainError(f"new width {n_new} must exceed current width {sol.width}")
    wider = solve_selector(factor_base(sol.base), n_new, sol.selector)
    if wider.residue % sol.modulus != sol.residue:
        raise InvariantViolation(
            f"prefix coherence failed: {wider.residue} mod {sol.modulus} != {sol.residue}"
        )
    return wider


def inverse_of_five_mod_pow2(n: int) -> int:
    """``5**(2**(n-2) - 1) mod 2**n``, the inverse of 5 modulo ``2**n``."""
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    return mod_pow(5, 2 ** (n - 2) - 1, 2**n)


def closed_form_base10(n: int) -> tuple[int, int]:
    """``(r_n, s_n)`` for base 10: ``r = 5**(n*2**(n-2)) mod 10**n``, ``s = 10**n + 1 - r``.

    Width 1 is not covered by the formula; use ``solve_selector`` there (5 and 6).
    """
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    modulus = 10**n
    r = mod_pow(5, n * 2 ** (n - 2), modulus)
    s = (modulus + 1 - r) % modulus
    return r, s


def brute_force_idempotents(base: int, n: int, ceiling: int = DEFAULT_ORACLE_CEILING) -> list[int]:
    """Exhaustive scan of ``[0, base**n)`` for ``x*(x-1) = 0 (mod base**n)``."""
    if base < 2 or n < 1:
        raise DomainError(f"need base >= 2 and n >= 1, got base={base}, n={n}")
    modulus = base**n
    if modulus > ceiling:
        raise OracleTooLargeError(f"{base}**{n} = {modulus} exceeds the oracle ceiling {ceiling}")
    return [x for x in range(modulus) if x * (x - 1) % modulus == 0]
