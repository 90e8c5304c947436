"""Exact rational arithmetic, combinatorial primitives, and certified brackets.

Rationals are plain ``fractions.Fraction`` (always canonical: positive
denominator, reduced).  Irrational quantities such as x^(p/q) are returned as
``Bracket`` intervals with rational endpoints certified to enclose the true
value; the bracket degenerates to a point whenever the value is rational and
detected (integer exponents, perfect powers).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Q = Fraction
QLike = Union[int, Fraction]


def binom(n: int, k: int) -> int:
    """C(n, k) as an exact integer; 0 outside the range 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def elem_sym(values: Sequence[QLike], j: int) -> Fraction:
    """Elementary symmetric function S_j of the given values (S_0 = 1)."""
    if j < 0 or j > len(values):
        raise ValueError(f"elementary symmetric degree {j} out of range 0..{len(values)}")
    # DP over prefixes: e[i] holds S_i of the values consumed so far.
    e = [Fraction(0)] * (j + 1)
    e[0] = Fraction(1)
    for v in values:
        v = Fraction(v)
        for i in range(min(j, len(e) - 1), 0, -1):
            e[i] += v * e[i - 1]
    return e[j]


def floor_q(x: QLike) -> int:
    return math.floor(Fraction(x))


def ceil_q(x: QLike) -> int:
    return math.ceil(Fraction(x))


def iroot(a: int, q: int) -> tuple[int, bool]:
    """Integer floor q-th root of a >= 0, plus whether it is exact."""
    if a < 0:
        raise ValueError("iroot of negative integer")
    if q < 1:
        raise ValueError("root index must be >= 1")
    if a in (0, 1) or q == 1:
        return a, True
    if q == 2:
        r = math.isqrt(a)
        return r, r * r == a
    # Newton iteration on integers, seeded from the bit length.
    x = 1 << -(-a.bit_length() // q)
    while True:
        y = ((q - 1) * x + a // x ** (q - 1)) // q
        if y >= x:
            break
        x = y
    while x ** q > a:
        x -= 1
    return x, x ** q == a


@dataclass(frozen=True)
class Bracket:
    """Closed rational interval [lo, hi] certified to contain a real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"bracket endpoints out of order: {self.lo} > {self.hi}")

    @staticmethod
    def point(x: QLike) -> "Bracket":
        x = Fraction(x)
        return Bracket(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, x: QLike) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    def intersects(self, other: "Bracket") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __add__(self, other: Union["Bracket", QLike]) -> "Bracket":
        other = _as_bracket(other)
        return Bracket(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other: Union["Bracket", QLike]) -> "Bracket":
        other = _as_bracket(other)
        return Bracket(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other: QLike) -> "Bracket":
        return _as_bracket(other) - self

    def __mul__(self, other: Union["Bracket", QLike]) -> "Bracket":
        other = _as_bracket(other)
        products = [
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        ]
        return Bracket(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other: Union["Bracket", QLike]) -> "Bracket":
        other = _as_bracket(other)
        if other.lo <= 0 <= other.hi:
            raise ZeroDivisionError("bracket divisor straddles zero")
        inv = Bracket(1 / other.hi, 1 / other.lo)
        return self * inv

    def __rtruediv__(self, other: QLike) -> "Bracket":
        return _as_bracket(other) / self


def _as_bracket(x: Union[Bracket, QLike]) -> Bracket:
    return x if isinstance(x, Bracket) else Bracket.point(x)


def bracket_min(brackets: Iterable[Bracket]) -> Bracket:
    items = list(brackets)
    if not items:
        raise ValueError("bracket_min of empty collection")
    return Bracket(min(b.lo for b in items), min(b.hi for b in items))


def bracket_prod(brackets: Iterable[Union[Bracket, QLike]]) -> Bracket:
    out = Bracket.point(1)
    for b in brackets:
        out = out * b
    return out


def nth_root_bracket(r: QLike, q: int, tol: QLike) -> Bracket:
    """Certified bracket for r^(1/q), r >= 0, q >= 1; exact on perfect powers."""
    r = Fraction(r)
    tol = Fraction(tol)
    if r < 0:
        raise ValueError("nth root of negative rational")
    if q < 1:
        raise ValueError("root index must be >= 1")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if q == 1 or r in (0, 1):
        return Bracket.point(r)
    num_root, num_exact = iroot(r.numerator, q)
    den_root, den_exact = iroot(r.denominator, q)
    if num_exact and den_exact:
        return Bracket.point(Fraction(num_root, den_root))
    scale = max(2, -(-1 // tol))  # ceil(1/tol)
    m = (r.numerator * scale ** q) // r.denominator
    t, exact = iroot(m, q)
    lo = Fraction(t, scale)
    if exact and lo ** q == r:
        return Bracket.point(lo)
    return Bracket(lo, Fraction(t + 1, scale))


def pow_bracket(x: QLike, e: QLike, tol: QLike) -> Bracket:
    """Certified bracket for x^e with x >= 0 rational and e rational.

    Width is at most tol unless the value is exactly rational, in which case
    the bracket is a point.  Requires x > 0 when e < 0.
    """
    x = Fraction(x)
    e = Fraction(e)
    if x < 0:
        raise ValueError("pow_bracket base must be nonnegative")
    if x == 0:
        if e < 0:
            raise ValueError("0 cannot be raised to a negative power")
        return Bracket.point(1 if e == 0 else 0)
    if e.denominator == 1:
        return Bracket.point(x ** int(e))
    r = x ** e.numerator  # exact rational; sign of the numerator handles e < 0
    return nth_root_bracket(r, e.denominator, tol)
