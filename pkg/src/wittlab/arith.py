"""Small number-theoretic helpers shared by every module."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from sympy import divisors as _divisors
from sympy import mobius as _mobius

__all__ = [
    "Fraction",
    "divisors",
    "mobius",
    "gcd",
    "lcm",
    "normalize",
    "parse_rational",
    "format_rational",
]


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """Positive divisors of ``n`` in increasing order."""
    if n < 1:
        raise ValueError(f"divisors of non-positive integer {n}")
    return tuple(int(d) for d in _divisors(n))


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    return int(_mobius(n))


def normalize(x):
    """Collapse an integral Fraction to int so that fast int arithmetic is used."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or an int into a Fraction; reject zero denominators."""
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    s = text.strip()
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            p, q = int(num), int(den)
        except ValueError:
            raise ValueError(f"not a rational: {text!r}") from None
        if q == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(p, q)
    try:
        return Fraction(int(s))
    except ValueError:
        raise ValueError(f"not a rational: {text!r}") from None


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
