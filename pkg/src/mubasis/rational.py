"""Exact rational scalars.

Rationals are plain :class:`fractions.Fraction` values, except that
integral values are stored as ``int``.  Python mixes the two freely and
integer arithmetic is several times faster, which matters inside the
determinant kernels.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Union

Rat = Union[int, Fraction]


def rat(value) -> Rat:
    """Coerce ``value`` (int, Fraction, or a string like ``"-3/4"``) to a rational."""
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return rat(Fraction(value))
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def div(a: Rat, b: Rat) -> Rat:
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
    return rat(Fraction(a) / b)


def to_string(value: Rat) -> str:
    """Serialize as ``"num/den"``; the denominator is always written."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def from_string(text: str) -> Rat:
    return rat(Fraction(text))


def primitive_scale(values: Iterable[Rat]) -> Fraction:
    """Return ``c`` such that ``[v / c for v in values]`` are coprime integers
    whose first nonzero entry is positive.  ``values`` must not be all zero."""
    values = [Fraction(v) for v in values if v != 0]
    if not values:
        raise ValueError("no nonzero values")
    den = lcm(*(v.denominator for v in values))
    num = 0
    for v in values:
        num = gcd(num, v.numerator * (den // v.denominator))
    scale = Fraction(num, den)
    return -scale if values[0] < 0 else scale
