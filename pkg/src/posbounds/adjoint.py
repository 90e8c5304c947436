"""Effective adjoint-bundle thresholds and surface exception checkers.

Jet thresholds and pluricanonical bounds from the Riemann-Roch / vanishing
method, plus the classical surface criteria (Reider, Beltrametti-Sommese) as
exception checkers over supplied divisor data.  Ampleness/nefness hypotheses
are caller declarations echoed into the report, never verified.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .core import binom
from .report import BoundReport


@dataclass(frozen=True)
class JetSpec:
    """Requested jet orders s_j at finitely many points."""

    orders: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(s < 0 for s in self.orders):
            raise ValueError("jet orders must be nonnegative")

    @staticmethod
    def of(*orders: int) -> "JetSpec":
        return JetSpec(tuple(orders))

    @staticmethod
    def very_ample() -> "JetSpec":
        # 1-jet at a single point encodes very ampleness in this family of
        # bounds; the two-points reading is exposed separately.
        return JetSpec((1,))


def siu_jet_threshold(n: int, jets: JetSpec) -> int:
    """m such that 2K+mL+G generates the requested jets:
    m >= 2 + sum C(3n + 2 s_j - 1, n)."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    return 2 + sum(binom(3 * n + 2 * s - 1, n) for s in jets.orders)


def very_ample_threshold(n: int, reading: str = "one_point_s1") -> int:
    """Very-ampleness specialisation of siu_jet_threshold.

    The standard reading is one point with a 1-jet (2 + C(3n+1, n)); the
    alternative two-points-with-0-jets reading gives a smaller number and is
    only available under its own flag.
    """
    if reading == "one_point_s1":
        return siu_jet_threshold(n, JetSpec((1,)))
    if reading == "two_points_s0":
        return siu_jet_threshold(n, JetSpec((0, 0)))
    raise ValueError(f"unknown reading {reading!r}")


def siu_degree_conditions(n: int, jets: JetSpec) -> dict[int, Fraction]:
    """Per-dimension thresholds for the fixed-multiple criterion: jets are
    generated by 2K+(n+1)L+G provided L^d.Y strictly exceeds
    2^(d-1)/floor(n/d)^d * sum C(3n + 2 s_j - 1, n) for every d."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    total = sum(binom(3 * n + 2 * s - 1, n) for s in jets.orders)
    return {
        d: Fraction(2 ** (d - 1), (n // d) ** d) * total for d in range(1, n + 1)
    }


def corollary85_threshold(n: int) -> int:
    """m(K+(n+2)L)+G is very ample for m >= C(3n+1, n) - 2n."""
    return binom(3 * n + 1, n) - 2 * n


def theorem87_conditions(n: int, jets: JetSpec) -> dict[int, Fraction]:
    """Per-dimension thresholds for jet generation by 2K+L:
    L^d.Y > 2^(d-1)/floor(n/d)^d * sum C((n+1)(4n+2s_j+1)-2, n)."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    total = sum(binom((n + 1) * (4 * n + 2 * s + 1) - 2, n) for s in jets.orders)
    return {
        d: Fraction(2 ** (d - 1), (n // d) ** d) * total for d in range(1, n + 1)
    }


def lemma86_transfer(mu: int, n: int, s_j: int) -> int:
    """Jet order mu(n + s_j) + 1 required of mu*F so that K+F yields
    s_j-jets."""
    if mu < 1:
        raise ValueError("mu must be a positive integer")
    return mu * (n + s_j) + 1


def pluricanonical_bounds(
    n: int, sign: str, Kn_abs: int | None = None
) -> tuple[int, int | None]:
    """(m0, embedding degree): mK very ample for m >= C(3n+1,n)+4 in the
    general-type case, -mK very ample for m >= C(3n+1,n) in the Fano case;
    degree of the embedding is m0^n |K^n| when |K^n| is supplied."""
    base = binom(3 * n + 1, n)
    if sign == "general_type":
        m0 = base + 4
    elif sign == "fano":
        m0 = base
    else:
        raise ValueError(f"unknown case {sign!r}")
    degree = None
    if Kn_abs is not None:
        if Kn_abs <= 0:
            raise ValueError("|K^n| must be positive")
        degree = m0 ** n * Kn_abs
    return m0, degree


class CheckOutcome(Enum):
    INAPPLICABLE = "inapplicable"
    EXCEPTION = "exception"
    CRITERION_HOLDS = "criterion-holds"


@dataclass(frozen=True)
class CheckResult:
    outcome: CheckOutcome
    matched: tuple[tuple[int, int], ...] = ()


REIDER_SPANNED_EXCEPTIONS = ((0, -1), (1, 0))
REIDER_SEPARATION_EXCEPTIONS = ((0, -1), (0, -2), (1, 0), (1, -1), (2, 0))


def reider_check(
    L2: int, mode: str, divisors: Sequence[tuple[int, int]] = ()
) -> CheckResult:
    """Reider's surface criterion: spanned needs L^2 >= 5, separation needs
    L^2 >= 10; the supplied (L.D, D^2) pairs are tested against the printed
    exception lists."""
    if mode == "spanned":
        min_L2, exceptions = 5, REIDER_SPANNED_EXCEPTIONS
    elif mode == "separation":
        min_L2, exceptions = 10, REIDER_SEPARATION_EXCEPTIONS
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if L2 < min_L2:
        return CheckResult(CheckOutcome.INAPPLICABLE)
    matched = tuple(d for d in divisors if tuple(d) in exceptions)
    if matched:
        return CheckResult(CheckOutcome.EXCEPTION, matched)
    return CheckResult(CheckOutcome.CRITERION_HOLDS)


def bes_check(L2: int, p: int, divisors: Sequence[tuple[int, int]] = ()) -> CheckResult:
    """Beltrametti-Sommese p-jet criterion: applicable when L^2 > 4p; a
    divisor is exceptional when L.D - p <= D^2 < L.D / 2 (upper bound strict,
    compared exactly at the rational midpoint)."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    if L2 <= 4 * p:
        return CheckResult(CheckOutcome.INAPPLICABLE)
    matched = tuple(
        (LD, D2)
        for LD, D2 in divisors
        if LD - p <= D2 and Fraction(D2) < Fraction(LD, 2)
    )
    if matched:
        return CheckResult(CheckOutcome.EXCEPTION, matched)
    return CheckResult(CheckOutcome.CRITERION_HOLDS)


def surface_nadel_criterion(jets: JetSpec, L2: int, minLC: int) -> BoundReport:
    """Surface jet criterion with p = sum (2 + s_j)^2: satisfied iff both
    L^2 > p and min L.C > p (strict)."""
    p = sum((2 + s) ** 2 for s in jets.orders)
    satisfied = L2 > p and minLC > p
    return BoundReport(
        theorem="surface-nadel",
        inputs={"jets": list(jets.orders), "L2": L2, "minLC": minLC},
        threshold=p,
        verdict="satisfied" if satisfied else "unsatisfied",
        details={"L2_ok": L2 > p, "LC_ok": minLC > p},
    )
