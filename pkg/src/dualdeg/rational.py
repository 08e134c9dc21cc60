"""Canonical "p/q" rational strings used by every file format and manifest."""

from fractions import Fraction
from math import lcm
from typing import Iterable, Union

RationalLike = Union[int, Fraction, str]


def parse(text: RationalLike) -> Fraction:
    """Parse "p/q" (or a bare integer). Decimal strings are rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"expected a rational string, got {type(text).__name__}")
    s = text.strip()
    if "." in s or "e" in s.lower():
        raise ValueError(f"rationals must be given as 'p/q', not {text!r}")
    if "/" in s:
        num, den = s.split("/", 1)
        if int(den) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(s))


def fmt(q: Union[int, Fraction]) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def common_denominator(values: Iterable[Fraction]) -> int:
    out = 1
    for v in values:
        out = lcm(out, Fraction(v).denominator)
    return out
