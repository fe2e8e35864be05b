"""Idempotent residues modulo B**n: enumeration, twin structure, digit analysis."""

from .analysis import (
    TwinLeadingRecord,
    WidthCensus,
    count_exact_width,
    is_exact_width,
    leading_digit_stats,
    twin_digit_audit,
)
from .engine import (
    IdempotentSolution,
    TwinPair,
    brute_force_idempotents,
    closed_form_base10,
    enumerate_idempotents,
    extend_solution,
    inverse_of_five_mod_pow2,
    solve_selector,
    twin_of,
    twin_pairs,
)
from .errors import (
    DigitOverflowError,
    DomainError,
    InvariantViolation,
    NotInvertibleError,
    OracleTooLargeError,
    UnsupportedBaseError,
)
from .factorization import Factorization, factor_base, prime_power_moduli
from .modular import CongruenceSystem, crt_combine, ext_gcd, mod_inverse, mod_pow
from .radix import DigitString, to_digits

__version__ = "0.1.0"
