"""Exact rational scalars and their serialized forms.

The whole package computes over ``fractions.Fraction`` (aliased ``QQ``),
which already guarantees lowest terms, a positive denominator and value
equality.  Files and reports carry rationals as strings ``"p/q"`` or
``"p"``; anything float-shaped is rejected so that no approximation ever
sneaks into an exact pipeline.  Decimal renderings exist only for humans
and are clearly marked as approximate by the callers.
"""

from __future__ import annotations

import re
from decimal import Decimal, localcontext
from fractions import Fraction

from .errors import InputFormatError

QQ = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(value: object) -> Fraction:
    """Parse an ``int`` or a ``"p/q"`` / ``"p"`` string into a Fraction.

    Floats, decimal strings ("1.5") and scientific notation are rejected:
    only exact integer and ratio syntax is allowed.
    """
    if isinstance(value, bool):
        raise InputFormatError(f"expected a rational, got boolean {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise InputFormatError(
            f"float literal {value!r} rejected: use a rational string like \"3/2\"")
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.match(text):
            raise InputFormatError(
                f"malformed rational string {value!r}: expected \"p\" or \"p/q\"")
        num, _, den = text.partition("/")
        if den:
            if int(den) == 0:
                raise InputFormatError(f"zero denominator in {value!r}")
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    raise InputFormatError(f"cannot interpret {value!r} as a rational")


def format_rational(value: Fraction) -> str:
    """Render a Fraction as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def approx_decimal(value: Fraction, significant_digits: int = 12) -> str:
    """Decimal approximation to the given number of significant digits.

    Advisory output only -- never parsed back.
    """
    with localcontext() as ctx:
        ctx.prec = significant_digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def parse_vector(values: object, length: int | None = None) -> tuple[Fraction, ...]:
    """Parse a JSON-style list of rationals; optionally enforce a length."""
    if not isinstance(values, (list, tuple)):
        raise InputFormatError(f"expected a list of rationals, got {type(values).__name__}")
    vec = tuple(parse_rational(v) for v in values)
    if length is not None and len(vec) != length:
        raise InputFormatError(f"expected a vector of length {length}, got {len(vec)}")
    return vec


def format_vector(vec) -> list[str]:
    return [format_rational(x) for x in vec]
