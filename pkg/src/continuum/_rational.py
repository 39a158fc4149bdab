"""Exact rational helpers: parsing and "p/q" serialization over ``Fraction``."""

from __future__ import annotations

import re
from fractions import Fraction

_LITERAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer literal. Decimals are rejected on purpose."""
    m = _LITERAL.match(text)
    if m is None:
        raise ValueError(f"malformed rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in rational literal: {text!r}")
    return Fraction(num, den)


def format_rational(value: Fraction | int) -> str:
    """Serialize as ``"p/q"``, always with an explicit denominator."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a Fraction, int or 'p/q' string")
    return Fraction(value)
