"""
Integer arithmetic on the peripheral lattice L = H_1(torus) ~ Z^2.

A class is written (p, q) = p*gamma_1 + q*gamma_2.  For knot exteriors in
S^3 we use meridian-longitude coordinates, so the fraction m/n names the
class m*mu + n*lambda: the meridian is (1, 0) and the longitude (0, 1).

A slope is a +-pair of primitive classes.  Slopes are stored through a
canonical representative with p > 0, or (p, q) = (0, 1).

Everything here is exact Python integer arithmetic.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exceptions import PreconditionError, SchemaError

__all__ = [
    "PeripheralClass",
    "Slope",
    "distance",
    "slope_of",
    "is_primitive",
    "h1_filling_order",
    "parse_slope",
    "MERIDIAN",
    "LONGITUDE",
]


@dataclass(frozen=True, order=True)
class PeripheralClass:
    """An element p*gamma_1 + q*gamma_2 of the lattice."""

    p: int
    q: int

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)):
            raise TypeError("PeripheralClass coordinates must be integers")

    def __add__(self, other):
        other = as_class(other)
        return PeripheralClass(self.p + other.p, self.q + other.q)

    def __sub__(self, other):
        other = as_class(other)
        return PeripheralClass(self.p - other.p, self.q - other.q)

    def __neg__(self):
        return PeripheralClass(-self.p, -self.q)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return PeripheralClass(k * self.p, k * self.q)

    __rmul__ = __mul__

    def __iter__(self):
        yield self.p
        yield self.q

    def is_zero(self):
        return self.p == 0 and self.q == 0

    def content(self):
        """gcd(|p|, |q|); 0 for the zero class."""
        return math.gcd(self.p, self.q)

    def __str__(self):
        return f"({self.p},{self.q})"


@dataclass(frozen=True, order=True)
class Slope:
    """A slope, held by its canonical primitive representative."""

    rep: PeripheralClass

    def __post_init__(self):
        r = self.rep
        if r.content() != 1:
            raise PreconditionError(f"slope representative {r} is not primitive")
        if not (r.p > 0 or (r.p == 0 and r.q == 1)):
            raise PreconditionError(f"slope representative {r} is not canonical")

    @property
    def p(self):
        return self.rep.p

    @property
    def q(self):
        return self.rep.q

    def __iter__(self):
        return iter(self.rep)

    def fraction(self):
        """The slope as an element of Q, or None for 1/0."""
        if self.q == 0:
            return None
        return Fraction(self.p, self.q)

    def to_json(self):
        return [self.p, self.q]

    def __str__(self):
        return f"{self.p}/{self.q}"


MERIDIAN = Slope(PeripheralClass(1, 0))
LONGITUDE = Slope(PeripheralClass(0, 1))


def as_class(v) -> PeripheralClass:
    """Coerce a Slope, PeripheralClass or integer pair to a PeripheralClass."""
    if isinstance(v, PeripheralClass):
        return v
    if isinstance(v, Slope):
        return v.rep
    p, q = v
    return PeripheralClass(int(p), int(q))


def distance(a, b) -> int:
    """Minimal geometric intersection |a.p*b.q - b.p*a.q| of two classes."""
    if type(a) is not PeripheralClass:
        a = as_class(a)
    if type(b) is not PeripheralClass:
        b = as_class(b)
    return abs(a.p * b.q - b.p * a.q)


def slope_of(m: int, n: int) -> Slope:
    """The slope through the nonzero class (m, n)."""
    if m == 0 and n == 0:
        raise PreconditionError("the zero class does not determine a slope")
    g = math.gcd(m, n)
    m, n = m // g, n // g
    if m < 0 or (m == 0 and n < 0):
        m, n = -m, -n
    return Slope(PeripheralClass(m, n))


def is_primitive(a) -> bool:
    return as_class(a).content() == 1


def h1_filling_order(r):
    """Order of H_1 of the m/n filling of a knot exterior in S^3.

    Equal to |m|; the longitude (m = 0) gives math.inf.
    """
    m = as_class(r).p
    return abs(m) if m != 0 else math.inf


def parse_slope(text) -> Slope:
    """Read a slope from "m/n", "m" (meaning m/1), or a JSON pair [m, n]."""
    if isinstance(text, (list, tuple)):
        if len(text) != 2 or not all(isinstance(x, int) for x in text):
            raise SchemaError(f"slope pair must be [int, int], got {text!r}")
        return slope_of(*text)
    s = str(text).strip()
    try:
        if "/" in s:
            m, n = s.split("/")
            return slope_of(int(m), int(n))
        return slope_of(int(s), 1)
    except ValueError as exc:
        if isinstance(exc, PreconditionError):
            raise
        raise SchemaError(f"cannot parse slope {text!r}") from exc
