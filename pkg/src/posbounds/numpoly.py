"""Numerical polynomials in binomial basis and the three window lemmas.

P(m) = sum c_j * C(m, j) with integer c_j maps integers to integers by
construction.  The window searches assume (caller contract) that P >= 0 on
[m0, infinity); a failed search therefore signals a violated assertion, not a
missing value, and raises WindowNotFound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import binom


class WindowNotFound(Exception):
    """No qualifying integer in the stated window: the caller's
    nonnegativity assertion must have been false."""


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class NumericalPolynomial:
    """Integer-valued polynomial P(m) = sum coeffs[j] * C(m, j)."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.coeffs or self.coeffs[-1] == 0:
            raise ValueError("leading binomial-basis coefficient must be nonzero")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __call__(self, m: int) -> int:
        return sum(c * binom(m, j) for j, c in enumerate(self.coeffs))


def leading_coeff_rr(LdY: int, d: int) -> tuple[Fraction, int]:
    """Riemann-Roch leading data for a degree-d cycle: the polynomial has
    leading coefficient LdY / d! and binomial-basis leading entry a_d = LdY."""
    if d < 1:
        raise ValueError("cycle dimension must be >= 1")
    if LdY < 1:
        raise ValueError("top self-intersection must be positive")
    return Fraction(LdY, math.factorial(d)), LdY


def window_a(P: NumericalPolynomial, m0: int, N: int) -> int:
    """Smallest m in [m0, m0 + N*d] with P(m) >= N."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    d = P.degree
    for m in range(m0, m0 + N * d + 1):
        if P(m) >= N:
            return m
    raise WindowNotFound(f"no m in [{m0}, {m0 + N * d}] with P(m) >= {N}")


def window_b(P: NumericalPolynomial, m0: int, k: int) -> int:
    """Smallest m in [m0, m0 + k*d] with P(m) >= a_d * k^d / 2^(d-1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    d = P.degree
    bound = -(-P.leading * k ** d // 2 ** (d - 1))  # ceil
    for m in range(m0, m0 + k * d + 1):
        if P(m) >= bound:
            return m
    raise WindowNotFound(f"no m in [{m0}, {m0 + k * d}] with P(m) >= {bound}")


def window_c(P: NumericalPolynomial, m0: int, N: int) -> int:
    """Smallest m in [m0, m0 + N] with P(m) >= N; requires N >= 2 d^2."""
    d = P.degree
    if N < 2 * d * d:
        raise PreconditionViolated(f"need N >= 2d^2 = {2 * d * d}, got {N}")
    for m in range(m0, m0 + N + 1):
        if P(m) >= N:
            return m
    raise WindowNotFound(f"no m in [{m0}, {m0 + N}] with P(m) >= {N}")


def iterated_difference(P: NumericalPolynomial, d: int) -> int:
    """d-th iterated difference; equals the leading binomial coefficient a_d
    and is independent of base point (checked at two points)."""
    if d != P.degree:
        raise ValueError(f"difference order {d} does not match degree {P.degree}")

    def delta_d(base: int) -> int:
        return sum((-1) ** j * binom(d, j) * P(base + d - j) for j in range(d + 1))

    at0, at1 = delta_d(0), delta_d(1)
    if at0 != at1:
        raise AssertionError("iterated difference is not constant")
    return at0
