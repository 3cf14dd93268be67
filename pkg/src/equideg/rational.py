"""Exact rational scalars: parsing, formatting, conservative sqrt bounds.

Rationals cross every external interface as "p/q" strings so no float ever
leaks through a JSON boundary.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ParseError


def parse_rational(s) -> Fraction:
    """Parse "p/q", "p", or an int into an exact Fraction."""
    if isinstance(s, Fraction):
        return s
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str):
        try:
            return Fraction(s.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"not a rational: {s!r}") from exc
    raise ParseError(f"not a rational: {s!r} (floats are rejected)")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def sqrt_lower(q: Fraction, scale: int = 10**12) -> Fraction:
    """Rational lower bound for sqrt(q), q >= 0."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("sqrt of negative rational")
    if q == 0:
        return Fraction(0)
    # floor(sqrt(q * scale^2)) / scale <= sqrt(q)
    n = q.numerator * scale * scale
    d = q.denominator
    return Fraction(math.isqrt(n // d), scale)


def sqrt_upper(q: Fraction, scale: int = 10**12) -> Fraction:
    """Rational upper bound for sqrt(q), q >= 0."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("sqrt of negative rational")
    if q == 0:
        return Fraction(0)
    n = q.numerator * scale * scale
    d = q.denominator
    r = math.isqrt(n // d)
    return Fraction(r + 1, scale)
