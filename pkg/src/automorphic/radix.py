"""Positional base-B digit vectors, most significant digit first."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from .errors import DigitOverflowError, DomainError

_ALPHABET = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"


@dataclass(frozen=True)
class DigitString:
    base: int
    digits: tuple[int, ...]
    width: int

    def __post_init__(self):
        if len(self.digits) != self.width:
            raise DomainError(f"expected {self.width} digits, got {len(self.digits)}")
        if any(not 0 <= d < self.base for d in self.digits):
            raise DomainError(f"digit out of range for base {self.base}: {self.digits}")

    @property
    def value(self) -> int:
        return from_digits(self.digits, self.base)

    @property
    def leading(self) -> int:
        return self.digits[0]

    def __str__(self) -> str:
        return render_digits(self.digits, self.base)


def to_digits(x: int, base: int, width: int) -> DigitString:
    """Zero-padded digits of ``x`` in ``base``, exactly ``width`` long."""
    if base < 2:
        raise DomainError(f"base must be >= 2, got {base}")
    if width < 1:
        raise DomainError(f"width must be >= 1, got {width}")
    if x < 0:
        raise DomainError(f"cannot expand negative value {x}")
    if x >= base**width:
        raise DigitOverflowError(f"{x} needs more than {width} base-{base} digits")
    out = [0] * width
    for i in range(width - 1, -1, -1):
        x, out[i] = divmod(x, base)
    return DigitString(base, tuple(out), width)


def from_digits(digits: Sequence[int], base: int) -> int:
    value = 0
    for d in digits:
        value = value * base + d
    return value


def render_digits(digits: Sequence[int], base: int) -> str:
    """``0-9A-Z`` up to base 36; beyond that a bracketed list such as ``[12.0.31]``."""
    if base <= 36:
        return "".join(_ALPHABET[d] for d in digits)
    return "[" + ".".join(str(d) for d in digits) + "]"
