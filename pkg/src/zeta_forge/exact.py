"""Exact rational and combinatorial primitives.

Rationals are :class:`fractions.Fraction`, which keeps numerator and
denominator coprime with a positive denominator after every operation.
The string form ``p/q`` (``p`` alone when ``q == 1``) is the serialization
used by the CLI and by the JSON tables.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

BigRational = Fraction

__all__ = [
    "BigRational",
    "binomial",
    "factorial",
    "format_rational",
    "parse_rational",
]

_RATIONAL_RE = re.compile(r"^\s*([+\-−]?)(\d+)(?:/(\d+))?\s*$")


def binomial(n: int, r: int) -> int:
    """C(n, r) as an exact integer, 0 when ``r > n``."""
    if n < 0 or r < 0:
        raise ValueError(f"binomial needs non-negative arguments, got ({n}, {r})")
    # math.comb uses a multiplicative scheme and returns 0 for r > n
    return math.comb(n, r)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    return math.factorial(n)


def format_rational(value: Fraction | int) -> str:
    """Render ``value`` as ``p/q``, or ``p`` for integers.

    >>> format_rational(Fraction(-1, 30))
    '-1/30'
    >>> format_rational(Fraction(4, 2))
    '2'
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; also accepts a Unicode minus sign."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    value = Fraction(int(num), int(den) if den else 1)
    return -value if sign in ("-", "−") else value
