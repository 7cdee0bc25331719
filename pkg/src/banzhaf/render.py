"""Exact-friendly number rendering for reports.

Rationals are shown as "p/q" plus a decimal rounded to a chosen number of
significant digits; very large integers gain a 4-significant-digit
scientific rendering next to their exact digits.  Nothing here ever goes
through binary floating point.
"""

from __future__ import annotations

from decimal import Context, Decimal
from fractions import Fraction

SCI_THRESHOLD = 10**12


def format_sig(value: Fraction, digits: int = 4) -> str:
    """Decimal string with the given number of significant digits."""
    if digits < 1:
        raise ValueError("need at least one significant digit")
    if value == 0:
        return "0"
    ctx = Context(prec=digits)
    d = ctx.divide(Decimal(value.numerator), Decimal(value.denominator))
    return format(d, "f")


def format_sci(value: int, digits: int = 4) -> str:
    """Scientific notation with the given number of significant digits."""
    return f"{Decimal(value):.{digits - 1}e}"


def format_int(value: int, digits: int = 4) -> str:
    """Exact digits, annotated with scientific notation once unwieldy."""
    if abs(value) >= SCI_THRESHOLD:
        return f"{value} ({format_sci(value, digits)})"
    return str(value)
