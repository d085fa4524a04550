"""Exact rational scalars.

Rationals are :class:`fractions.Fraction` values, which already keep the
canonical form (positive denominator, reduced, zero as ``0/1``).  This module
adds the constructors, parsing and formatting used throughout the package.
"""

from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, ParseError

Rat = Fraction
RatLike = Union[int, Fraction]


def rat_make(n: int, d: int = 1) -> Rat:
    if d == 0:
        raise DivisionByZero(f"{n}/0")
    return Fraction(n, d)


def as_rat(value) -> Rat:
    """Coerce ints, Fractions and rational strings to :data:`Rat`."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return rat_parse(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def rat_arith(a: Rat, b: Rat, op: str) -> Rat:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DivisionByZero(f"{a} / 0")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def _digits_end(text: str, i: int) -> int:
    j = i
    while j < len(text) and text[j] in "0123456789":
        j += 1
    return j


def rat_parse(text: str) -> Rat:
    """Parse ``[+-]digits``, ``[+-]digits/digits`` or ``[+-]digits.digits``.

    Decimals are read exactly, so ``"0.1"`` is ``1/10``.
    """
    i = 0
    sign = 1
    if text[:1] in ("+", "-"):
        sign = -1 if text[0] == "-" else 1
        i = 1
    j = _digits_end(text, i)
    if j == i:
        raise ParseError(text, i, "expected digits")
    whole = int(text[i:j])
    if j == len(text):
        return Fraction(sign * whole)
    sep = text[j]
    if sep not in "/.":
        raise ParseError(text, j, "unexpected character")
    k = _digits_end(text, j + 1)
    if k == j + 1:
        raise ParseError(text, j + 1, "expected digits")
    if k != len(text):
        raise ParseError(text, k, "unexpected character")
    tail = text[j + 1:k]
    if sep == "/":
        den = int(tail)
        if den == 0:
            raise DivisionByZero(text)
        return Fraction(sign * whole, den)
    scale = 10 ** len(tail)
    return Fraction(sign * (whole * scale + int(tail)), scale)


def rat_to_string(a: Rat) -> str:
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def rat_to_decimal(a: Rat, digits: int) -> str:
    """Round ``a`` half-to-even to exactly ``digits`` fractional digits."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    scaled = abs(a) * 10 ** digits
    q, r = divmod(scaled.numerator, scaled.denominator)
    twice = 2 * r
    if twice > scaled.denominator or (twice == scaled.denominator and q % 2 == 1):
        q += 1
    body = str(q).rjust(digits + 1, "0")
    sign = "-" if a < 0 and q != 0 else ""
    return f"{sign}{body[:-digits]}.{body[-digits:]}"
