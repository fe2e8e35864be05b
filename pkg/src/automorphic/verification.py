"""Invariant sweep over a grid of (base, width) cells."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any

from .analysis import count_exact_width, twin_digit_audit
from .engine import (
    DEFAULT_ORACLE_CEILING,
    brute_force_idempotents,
    closed_form_base10,
    enumerate_idempotents,
    inverse_of_five_mod_pow2,
    solve_selector,
    twin_of,
    twin_pairs,
)
from .errors import InvariantViolation
from .factorization import factor_base, prime_power_moduli
from .modular import mod_inverse
from .radix import from_digits


@dataclass
class RunReport:
    command: str
    parameters: dict[str, Any]
    violations: list[str] = field(default_factory=list)
    checks: int = 0
    elapsed_ms: float = 0.0

    @property
    def outcome(self) -> str:
        return "fail" if self.violations else "pass"

    def to_dict(self) -> dict[str, Any]:
        # elapsed time is left out so stdout stays byte-identical between runs
        return {
            "command": self.command,
            "parameters": self.parameters,
            "outcome": self.outcome,
            "checks": self.checks,
            "violations": list(self.violations),
        }


def check_cell(base: int, n: int, oracle_ceiling: int = DEFAULT_ORACLE_CEILING) -> tuple[int, list[str]]:
    """Run every invariant for one cell; returns ``(checks_run, violations)``."""
    where = f"(B={base}, n={n})"
    bad: list[str] = []
    checks = 0

    def expect(ok: bool, what: str) -> None:
        nonlocal checks
        checks += 1
        if not ok:
            bad.append(f"{where} {what}")

    try:
        f = factor_base(base)
        modulus = base**n
        moduli = prime_power_moduli(f, n)
        prod = 1
        for q in moduli:
            prod *= q
        expect(prod == modulus, "prime-power moduli do not multiply to B^n")

        sols = enumerate_idempotents(base, n, include_trivial=True)
        residues = [s.residue for s in sols]
        expect(len(sols) == 2**f.m, f"expected {2**f.m} idempotents, got {len(sols)}")
        expect(len(set(residues)) == len(residues), "duplicate residues")
        for s in sols:
            expect((s.residue * s.residue - s.residue) % modulus == 0, f"{s.residue} not idempotent")
            expect(from_digits(s.digits, base) == s.residue, f"digits of {s.residue} do not round-trip")
            for bit, q in zip(s.selector, moduli):
                expect(s.residue % q == bit, f"{s.residue} mod {q} != selector bit {bit}")
            for k in range(1, n):
                lower = solve_selector(f, k, s.selector)
                expect(s.residue % base**k == lower.residue,
                       f"prefix coherence fails for class {s.selector} at k={k}")
            if not s.is_trivial:
                expect(twin_of(twin_of(s)) == s, f"twin involution fails for {s.residue}")

        if modulus <= oracle_ceiling:
            expect(brute_force_idempotents(base, n, oracle_ceiling) == residues,
                   "enumeration disagrees with brute-force oracle")

        for pair in twin_pairs(base, n):
            expect(pair.r.residue + pair.s.residue == modulus + 1, "twin sum != B^n + 1")
            if n >= 2:
                rec = twin_digit_audit(pair)
                expect(rec.r_leading + rec.s_leading == base - 1, "twin leading digits do not sum to B-1")

        census = count_exact_width(base, n)
        if n == 1:
            expect(census.exact_width_count == 2**f.m - 1, "n=1 count != 2^m - 1")
        else:
            expect(2 ** (f.m - 1) - 1 <= census.exact_width_count <= 2**f.m - 2,
                   "exact-width count outside bounds")

        if base == 10 and n >= 2:
            r, s = closed_form_base10(n)
            expect(r == solve_selector(f, n, (1, 0)).residue, "closed form r_n disagrees with CRT")
            expect(s == solve_selector(f, n, (0, 1)).residue, "closed form s_n disagrees with CRT")
            expect(inverse_of_five_mod_pow2(n) == mod_inverse(5, 2**n),
                   "5^(2^(n-2)-1) is not the inverse of 5 mod 2^n")
    except InvariantViolation as exc:
        bad.append(f"{where} {exc}")
    return checks, bad


def verify_grid(bases: range, widths: range, oracle_ceiling: int = DEFAULT_ORACLE_CEILING) -> RunReport:
    report = RunReport(
        "verify",
        {"bases": f"{bases.start}..{bases.stop - 1}", "n": f"{widths.start}..{widths.stop - 1}",
         "oracle_ceiling": oracle_ceiling},
    )
    start = time.perf_counter()
    for base in bases:
        for n in widths:
            checks, bad = check_cell(base, n, oracle_ceiling)
            report.checks += checks
            report.violations.extend(bad)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report
