"""Exact rational arithmetic, extended accuracies, and closed rational intervals.

Everything in this library is built on arbitrary-precision fractions in
canonical form; no operation ever rounds.  Error bounds ("accuracies")
are strictly positive rationals extended with a single infinite value
``INF``, which means "no information".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "Rational",
    "rat",
    "as_fraction",
    "INF",
    "Accuracy",
    "is_finite",
    "Interval",
    "interval_of",
    "parse_rational",
    "parse_accuracy",
    "format_rational",
]

# Arbitrary-precision rational in canonical form: positive denominator,
# gcd(|numerator|, denominator) = 1.  fractions.Fraction guarantees both.
Rational = Fraction


def rat(numerator: int, denominator: int = 1) -> Fraction:
    """Exact rational numerator/denominator in canonical form.

    Raises ZeroDivisionError for a zero denominator.
    """
    return Fraction(numerator, denominator)


def as_fraction(value) -> Fraction:
    """Coerce an int or Fraction to Fraction; floats are refused outright."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class _InfiniteAccuracy:
    """The accuracy "no information": compares greater than every rational."""

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("realcomp.INF")

    def __lt__(self, other):
        if isinstance(other, (_InfiniteAccuracy, Fraction, int)):
            return False
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, _InfiniteAccuracy):
            return True
        if isinstance(other, (Fraction, int)):
            return False
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, _InfiniteAccuracy):
            return False
        if isinstance(other, (Fraction, int)):
            return True
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (_InfiniteAccuracy, Fraction, int)):
            return True
        return NotImplemented


INF = _InfiniteAccuracy()

# A positive rational error bound, or INF.
Accuracy = Union[Fraction, _InfiniteAccuracy]


def is_finite(accuracy: Accuracy) -> bool:
    return accuracy is not INF


@dataclass(frozen=True)
class Interval:
    """Closed rational interval [lo, hi]."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        x = as_fraction(x)
        return self.lo <= x <= self.hi

    def __repr__(self):
        return f"[{self.lo}, {self.hi}]"


def interval_of(center, radius) -> Interval:
    """The closed interval of all points within `radius` of `center`."""
    center = as_fraction(center)
    radius = as_fraction(radius)
    if radius <= 0:
        raise ValueError(f"radius must be positive, got {radius}")
    return Interval(center - radius, center + radius)


_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_DYADIC_RE = re.compile(r"^2\^-(\d+)$")


def parse_rational(text: str) -> Fraction:
    """Parse "n" or "n/d" with decimal integers and positive denominator.

    The grammar is deliberately strict: no whitespace inside, no decimal
    points, no sign on the denominator.  This is the bit-exact text form
    used at the command-line boundary.
    """
    m = _RATIONAL_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a rational: {text!r} (expected 'n' or 'n/d')")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def parse_accuracy(text: str) -> Fraction:
    """Parse a strictly positive rational accuracy, with "2^-k" shorthand."""
    text = text.strip()
    m = _DYADIC_RE.match(text)
    if m:
        value = Fraction(1, 2 ** int(m.group(1)))
    else:
        value = parse_rational(text)
    if value <= 0:
        raise ValueError(f"accuracy must be positive, got {text!r}")
    return value


def format_rational(q: Fraction) -> str:
    """Canonical text form: "n" for integers, "n/d" otherwise."""
    return str(q)
