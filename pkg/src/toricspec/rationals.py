"""Exact rational scalars and their text forms.

Every quantity in this package is an exact rational; floats appear only in
advisory display columns. The scalar type Rat is the standard Fraction,
which already guarantees canonical reduced form with positive denominator.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction

from .errors import ValidationError

Rat = Fraction

APPROX_DIGITS = 12


def parse_rat(text: str) -> Fraction:
    """Parse "p/q", a decimal string, or a plain integer into a Fraction.

    >>> parse_rat("89/55")
    Fraction(89, 55)
    >>> parse_rat("1.61")
    Fraction(161, 100)
    """
    if not isinstance(text, str) or not text.strip():
        raise ValidationError(f"not a rational literal: {text!r}")
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"not a rational literal: {text!r}") from exc


def rat_cmp(x: Fraction, y: Fraction) -> int:
    """Three-way comparison: -1, 0, or 1."""
    if x < y:
        return -1
    return 1 if x > y else 0


def to_string(x: Fraction) -> str:
    """Canonical exact text: "p/q" when q > 1, otherwise plain "p".

    Round-trips through parse_rat.
    """
    return str(x)


def approx_string(x: Fraction, digits: int = APPROX_DIGITS) -> str:
    """Decimal rendering rounded to `digits` significant digits.

    Always computed from the exact value, never from a prior approximation.
    """
    if digits < 1:
        raise ValidationError("digits must be positive")
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(x.numerator) / Decimal(x.denominator)
    return str(d)
