"""Exact-width counting, leading-digit audits of twins, and the CSV export."""

from __future__ import annotations

import csv
from collections import Counter
from dataclasses import dataclass
from typing import TextIO

from .engine import IdempotentSolution, TwinPair, enumerate_idempotents, twin_pairs
from .errors import DomainError, InvariantViolation
from .factorization import factor_base

CSV_HEADER = ("base", "n", "r_residue", "s_residue", "r_leading", "s_leading", "classification")


def is_exact_width(sol: IdempotentSolution) -> bool:
    """True iff the leading digit at ``sol.width`` is nonzero (for width 1: residue >= 1)."""
    if sol.width == 1:
        return sol.residue >= 1
    return sol.residue >= sol.base ** (sol.width - 1)


@dataclass(frozen=True)
class WidthCensus:
    base: int
    width: int
    m: int
    exact_width_count: int
    lower_bound: int | None  # None for width 1
    upper_bound: int | None
    n1_exact: int | None  # only for width 1


def count_exact_width(base: int, n: int) -> WidthCensus:
    """Count idempotents with exactly ``n`` base-``base`` digits.

    For ``n >= 2`` only nontrivial solutions can qualify; the count must fall in
    ``[2**(m-1) - 1, 2**m - 2]``. For ``n == 1`` every positive solution counts
    and the total is exactly ``2**m - 1``. A violation raises
    :class:`InvariantViolation`.
    """
    m = factor_base(base).m
    sols = enumerate_idempotents(base, n, include_trivial=True)
    if n == 1:
        count = sum(1 for s in sols if is_exact_width(s))
        census = WidthCensus(base, n, m, count, None, None, 2**m - 1)
        if count != census.n1_exact:
            raise InvariantViolation(f"base {base}, n=1: {count} != 2^{m} - 1")
        return census
    count = sum(1 for s in sols if not s.is_trivial and is_exact_width(s))
    census = WidthCensus(base, n, m, count, 2 ** (m - 1) - 1, 2**m - 2, None)
    if not census.lower_bound <= count <= census.upper_bound:
        raise InvariantViolation(
            f"base {base}, n={n}: count {count} outside [{census.lower_bound}, {census.upper_bound}]"
        )
    return census


@dataclass(frozen=True)
class TwinLeadingRecord:
    base: int
    width: int
    r_residue: int
    s_residue: int
    r_leading: int
    s_leading: int
    classification: str  # "one" or "two" exact-width members
    r_selector: tuple[int, ...]

    def csv_row(self) -> list[str]:
        return [
            str(self.base),
            str(self.width),
            str(self.r_residue),
            str(self.s_residue),
            str(self.r_leading),
            str(self.s_leading),
            self.classification,
        ]


def twin_digit_audit(pair: TwinPair) -> TwinLeadingRecord:
    """Leading digits of a twin pair; they always sum to ``base - 1``."""
    base, n = pair.r.base, pair.r.width
    if n < 2:
        raise DomainError("leading-digit audit needs width >= 2")
    r_lead, s_lead = pair.r.digits[0], pair.s.digits[0]
    if r_lead + s_lead != base - 1:
        raise InvariantViolation(
            f"base {base}, n={n}: leading digits {r_lead} + {s_lead} != {base - 1}"
        )
    zeros = (r_lead == 0) + (s_lead == 0)
    return TwinLeadingRecord(
        base, n, pair.r.residue, pair.s.residue, r_lead, s_lead,
        "one" if zeros == 1 else "two", pair.r.selector,
    )


def leading_digit_stats(base: int, n_from: int, n_to: int) -> list[TwinLeadingRecord]:
    """One audit record per nontrivial twin per width, widths ascending.

    Purely descriptive: which twin loses its leading digit is not predicted.
    """
    if n_from < 2:
        raise DomainError(f"n_from must be >= 2, got {n_from}")
    if n_from > n_to:
        raise DomainError(f"empty width range {n_from}..{n_to}")
    return [
        twin_digit_audit(pair)
        for n in range(n_from, n_to + 1)
        for pair in twin_pairs(base, n)
    ]


def summarize(records: list[TwinLeadingRecord]) -> dict[tuple[int, ...], Counter]:
    """Counts of ``one``/``two`` keyed by the ``r`` selector of each twin class."""
    out: dict[tuple[int, ...], Counter] = {}
    for rec in records:
        out.setdefault(rec.r_selector, Counter())[rec.classification] += 1
    return out


def write_stats_csv(records: list[TwinLeadingRecord], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(rec.csv_row())
