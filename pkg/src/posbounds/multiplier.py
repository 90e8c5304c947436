"""Multiplier ideals of monomial weights and SNC Q-divisors.

The monomial case: for the weight log(|z_1|^a1 + ... + |z_p|^ap) the ideal is
generated by the monomials z^beta with sum_j (beta_j + 1)/a_j > 1, strictly
(the boundary integral diverges).  A dyadic quadrature oracle double-checks
the integrability criterion at desk scale (p <= 2); it is test support only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .core import QLike, ceil_q


@dataclass(frozen=True)
class MonomialWeightData:
    alpha: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.alpha or any(a <= 0 for a in self.alpha):
            raise ValueError("weight exponents must be positive")

    @staticmethod
    def of(*alpha: QLike) -> "MonomialWeightData":
        return MonomialWeightData(tuple(Fraction(a) for a in alpha))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators (an antichain)."""

    generators: frozenset[tuple[int, ...]]

    def contains(self, beta: Sequence[int]) -> bool:
        return any(all(b >= g for b, g in zip(beta, gen)) for gen in self.generators)

    @property
    def is_trivial(self) -> bool:
        p = len(next(iter(self.generators), ()))
        return tuple(0 for _ in range(p)) in self.generators

    def sorted_generators(self) -> list[tuple[int, ...]]:
        return sorted(self.generators, reverse=True)


def membership_criterion(alpha: Sequence[Fraction], beta: Sequence[int]) -> bool:
    """Strict integrability criterion sum (beta_j + 1)/alpha_j > 1."""
    return sum(Fraction(b + 1, 1) / a for b, a in zip(beta, alpha)) > 1


def monomial_multiplier_ideal(w: MonomialWeightData) -> MonomialIdeal:
    alpha = w.alpha
    p = len(alpha)
    # beta_j + 1 > alpha_j alone satisfies the criterion, so minimal
    # generators live in the box beta_j <= ceil(alpha_j).
    box = [ceil_q(a) for a in alpha]
    members: list[tuple[int, ...]] = []
    for beta in _box_iter(box):
        if membership_criterion(alpha, beta):
            members.append(beta)
    minimal = [
        b
        for b in members
        if not any(
            other != b and all(o <= x for o, x in zip(other, b)) for other in members
        )
    ]
    return MonomialIdeal(frozenset(minimal))


def _box_iter(box: list[int]):
    if not box:
        yield ()
        return
    for b in range(box[0] + 1):
        for rest in _box_iter(box[1:]):
            yield (b,) + rest


@dataclass(frozen=True)
class SNCDivisorData:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if any(a < 0 for a in self.coeffs):
            raise ValueError("divisor coefficients must be nonnegative")

    @staticmethod
    def of(*coeffs: QLike) -> "SNCDivisorData":
        return SNCDivisorData(tuple(Fraction(a) for a in coeffs))


def snc_round_down(d: SNCDivisorData) -> tuple[int, ...]:
    """Round-down of a normal-crossing Q-divisor: the multiplier ideal is
    the sheaf of functions divisible by prod g_j^{floor(a_j)}."""
    return tuple(math.floor(a) for a in d.coeffs)


class SkodaClass(Enum):
    TRIVIAL = "trivial"
    INDETERMINATE = "indeterminate"
    CONTAINED_IN_POWER = "contained_in_power"


@dataclass(frozen=True)
class SkodaResult:
    kind: SkodaClass
    power: int | None = None  # I(phi) is inside m^power when kind is CONTAINED_IN_POWER


def skoda_classify(nu: QLike, n: int) -> SkodaResult:
    """Classify the local multiplier ideal from the Lelong number alone.

    nu < 1 forces the trivial ideal; nu >= n + s forces containment in the
    (s+1)-st power of the maximal ideal; in between nothing is decided.
    """
    nu = Fraction(nu)
    if nu < 0:
        raise ValueError("Lelong number must be nonnegative")
    if nu < 1:
        return SkodaResult(SkodaClass.TRIVIAL)
    if nu >= n:
        s = math.floor(nu - n)
        return SkodaResult(SkodaClass.CONTAINED_IN_POWER, power=s + 1)
    return SkodaResult(SkodaClass.INDETERMINATE)


def integrability_oracle(
    alpha: Sequence[QLike], beta: Sequence[int], grid: int = 2048
) -> bool:
    """Numerically decide convergence of the corner integral

        int_{[0,1]^p} t^((beta+1)/alpha) / (t_1+...+t_p) prod dt_j/t_j

    by dyadic-corner refinement: the integral converges iff the dyadic shell
    sums decay geometrically.  Test support only; p <= 2.
    """
    alpha = [Fraction(a) for a in alpha]
    if any(a <= 0 for a in alpha):
        raise ValueError("alpha must be positive")
    p = len(alpha)
    if p < 1 or p > 2:
        raise ValueError("oracle is desk-scale only (p <= 2)")
    if len(beta) != p:
        raise ValueError("beta must have the same length as alpha")
    if grid < 64:
        raise ValueError("grid resolution must be >= 64")
    e = [float(Fraction(b + 1, 1) / a) for b, a in zip(beta, alpha)]
    k1, k2 = grid // 2, grid
    slope = (_shell_log2(e, k1) - _shell_log2(e, k2)) / (k2 - k1)
    # Convergence exponent is min(e_1, ..., e_p, sum e - 1); its distance from
    # zero is bounded below by the rational structure of the inputs, so a
    # grid-scaled cutoff separates the two regimes.
    return slope > 3.0 / grid


def _shell_log2(e: list[float], k: int) -> float:
    """log2 of the dyadic shell sum at depth k (cells with max index = k)."""
    ln2 = math.log(2.0)
    if len(e) == 1:
        return -k * (e[0] - 1.0)
    terms = []
    for i in range(k + 1):
        # cell (i, k):  2^{-(i e1 + k e2)} / (2^{-i} + 2^{-k})
        terms.append(-(i * e[0] + k * e[1]) + min(i, k) - math.log1p(2.0 ** (-abs(i - k))) / ln2)
        if i < k:
            terms.append(-(k * e[0] + i * e[1]) + min(i, k) - math.log1p(2.0 ** (-abs(i - k))) / ln2)
    m = max(terms)
    return m + math.log(sum(2.0 ** (t - m) for t in terms)) / ln2
