"""Exact rational scalars.

Every coordinate and every predicate in this package is computed over the
rationals; floating point never enters a geometric decision.  The scalar type
is ``fractions.Fraction``, which already maintains the canonical form we rely
on (denominator positive, numerator and denominator coprime, value equality =
structural equality of the canonical pair).  This module pins that choice
behind a small interface: strict construction, the ``p/q`` text form used by
the DSL and JSON reports, and the one sanctioned escape hatch into decimal
strings for rendering.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ZeroDenominator

Rational = Fraction

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def make_rational(numerator: int, denominator: int = 1) -> Rational:
    """Return numerator/denominator in canonical form; sign lives on the numerator."""
    if denominator == 0:
        raise ZeroDenominator(f"{numerator}/0 is not a rational")
    return Fraction(numerator, denominator)


def parse_rational(text: str) -> Rational:
    """Parse the textual form ``p/q`` (or plain ``p``).

    An optional leading sign is allowed; whitespace is not.  The denominator,
    when present, is an unsigned integer.
    """
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return make_rational(num, den)


def format_rational(value: Rational) -> str:
    """Inverse of :func:`parse_rational`: ``p/q``, or ``p`` when q = 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_decimal_string(value: Rational, digits: int = 12) -> str:
    """Decimal rendering of an exact rational, for reports and SVG only.

    Rounds to ``digits`` fractional digits (half away from zero) using integer
    arithmetic, then strips trailing zeros.  This is the only place the
    package converts out of exact form.
    """
    if digits < 0:
        raise ValueError("digits must be >= 0")
    n, d = value.numerator, value.denominator
    negative = n < 0
    scaled = abs(n) * 10**digits
    whole, rem = divmod(scaled, d)
    if 2 * rem >= d:
        whole += 1
    text = str(whole).rjust(digits + 1, "0")
    int_part, frac_part = (text, "") if digits == 0 else (text[:-digits], text[-digits:])
    frac_part = frac_part.rstrip("0")
    out = int_part if not frac_part else f"{int_part}.{frac_part}"
    if negative and out.strip("0.") != "":
        out = "-" + out
    return out
