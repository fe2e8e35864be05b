"""Kordemsky's ATOM x ATOM = ****ATOM puzzle, solved through the idempotent enumerator."""

from __future__ import annotations

from dataclasses import dataclass

from .engine import enumerate_idempotents

LETTERS = "ATOM"


@dataclass(frozen=True)
class Candidate:
    residue: int
    text: str
    reason: str | None  # None when accepted

    @property
    def accepted(self) -> bool:
        return self.reason is None


def solve_atom() -> list[Candidate]:
    """Screen every 4-digit idempotent mod 10**4 against the puzzle's rules.

    A must be nonzero and the four letters must be distinct digits.
    """
    out = []
    for sol in enumerate_idempotents(10, len(LETTERS), include_trivial=True):
        if sol.digits[0] == 0:
            reason = "leading digit A is 0"
        elif len(set(sol.digits)) != len(LETTERS):
            reason = "letters A, T, O, M are not distinct digits"
        else:
            reason = None
        out.append(Candidate(sol.residue, sol.text, reason))
    return out
