"""Exception hierarchy shared by every module in the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class NotInvertibleError(DomainError):
    """Raised by :func:`~automorphic.modular.mod_inverse` when gcd(a, m) != 1."""

    def __init__(self, a: int, modulus: int, gcd: int):
        self.a = a
        self.modulus = modulus
        self.gcd = gcd
        super().__init__(f"{a} is not invertible modulo {modulus} (gcd={gcd})")


class UnsupportedBaseError(DomainError):
    """The base exceeds the configured factorization ceiling."""


class OracleTooLargeError(DomainError):
    """The modulus is too large for an exhaustive residue scan."""


class DigitOverflowError(DomainError):
    """A value does not fit in the requested number of digits."""


class InvariantViolation(RuntimeError):
    """A mathematical invariant failed; this always indicates a bug."""
