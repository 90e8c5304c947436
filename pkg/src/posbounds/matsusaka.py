"""Effective very-ampleness thresholds for multiples of an ample bundle.

Existence windows for sections of mL - B, the explicit main bound with its
internal recursion, the two published policies for the auxiliary constant
lambda_n, and the surface specialisations.  Every printed exponent here turns
out to be an integer, so the bounds are exact rationals; pow_bracket is still
used so a hypothetical fractional exponent would degrade gracefully to a
rounded-up bracket instead of crashing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .core import Bracket, QLike, pow_bracket
from .report import BoundReport


def prop131_window(n: int, LB: QLike, Ln: QLike) -> int:
    """Some m with a section of mL - B satisfies m <= floor(n LB / L^n) + 1 + n."""
    Ln = Fraction(Ln)
    if Ln < 1:
        raise ValueError("L^n must be >= 1")
    LB = Fraction(LB)
    if LB < 0:
        raise ValueError("L^(n-1).B must be nonnegative for nef B")
    m0 = math.floor(n * LB / Ln) + 1
    return m0 + n


def cor132_window(n: int, LB: QLike, LK: QLike, Ln: QLike) -> int:
    """Existence window for mL - B with B augmented by K_X + (n+1)L:
    m <= n((LB + LK)/L^n + n + 1), rounded up."""
    Ln = Fraction(Ln)
    if Ln < 1:
        raise ValueError("L^n must be >= 1")
    return math.ceil(n * ((Fraction(LB) + Fraction(LK)) / Ln + n + 1))


def lambda_n(n: int, policy: Union[str, int]) -> int:
    """Constant lambda_n with lambda_n(K+(n+2)L) very ample: the binomial
    policy C(3n+1, n) - 2n, the cubic policy n^3 - n^2 - n - 1 (n >= 2), or
    an explicit positive integer."""
    if isinstance(policy, int):
        if policy < 1:
            raise ValueError("explicit lambda must be a positive integer")
        return policy
    if policy == "demailly":
        return math.comb(3 * n + 1, n) - 2 * n
    if policy == "angehrn-siu":
        if n < 2:
            raise ValueError("the cubic policy needs n >= 2")
        return n ** 3 - n ** 2 - n - 1
    raise ValueError(f"unknown lambda policy {policy!r}")


@dataclass(frozen=True)
class MatsusakaInputs:
    """Intersection data for the main bound.  LH and LBH are computed from
    the policy when not supplied (H = lambda_n (K_X + (n+2)L))."""

    n: int
    Ln: Fraction
    LB: Fraction
    LK: Fraction
    lambda_policy: Union[str, int] = "demailly"
    LH: Fraction | None = None
    LBH: Fraction | None = None

    @staticmethod
    def of(
        n: int,
        Ln: QLike,
        LB: QLike,
        LK: QLike,
        lambda_policy: Union[str, int] = "demailly",
        LH: QLike | None = None,
        LBH: QLike | None = None,
    ) -> "MatsusakaInputs":
        if n < 2:
            raise ValueError("need n >= 2")
        Ln = Fraction(Ln)
        if Ln < 1:
            raise ValueError("L^n must be >= 1")
        LB, LK = Fraction(LB), Fraction(LK)
        if LB < 0:
            raise ValueError("L^(n-1).B must be nonnegative")
        return MatsusakaInputs(
            n,
            Ln,
            LB,
            LK,
            lambda_policy,
            None if LH is None else Fraction(LH),
            None if LBH is None else Fraction(LBH),
        )

    def resolved_LH(self) -> Fraction:
        if self.LH is not None:
            return self.LH
        lam = lambda_n(self.n, self.lambda_policy)
        return lam * (self.LK + (self.n + 2) * self.Ln)

    def resolved_LBH(self) -> Fraction:
        if self.LBH is not None:
            return self.LBH
        return self.LB + self.resolved_LH()


def _main_exponents(n: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    pre = Fraction(3 ** (n - 1) - 1, 2)
    ebh = Fraction(3 ** (n - 1) + 1, 2)
    eh = 3 ** (n - 2) * (Fraction(n, 2) - Fraction(3, 4)) - Fraction(1, 4)
    eln = 3 ** (n - 2) * (Fraction(n, 2) - Fraction(1, 4)) + Fraction(1, 4)
    return pre, ebh, eh, eln


def matsusaka_main(
    inputs: MatsusakaInputs, tol: QLike = Fraction(1, 10**12)
) -> BoundReport:
    """The explicit bound: mL - B is very ample whenever
    m >= (2n)^((3^(n-1)-1)/2) (LBH)^((3^(n-1)+1)/2) (LH)^(e_H) / (L^n)^(e_L)
    with e_H = 3^(n-2)(n/2 - 3/4) - 1/4 and e_L = 3^(n-2)(n/2 - 1/4) + 1/4."""
    n = inputs.n
    if inputs.Ln == 0:
        raise ValueError("L^n must be positive")
    tol = Fraction(tol)
    LH = inputs.resolved_LH()
    LBH = inputs.resolved_LBH()
    pre, ebh, eh, eln = _main_exponents(n)
    bound = (
        pow_bracket(Fraction(2 * n), pre, tol)
        * pow_bracket(LBH, ebh, tol)
        * pow_bracket(LH, eh, tol)
        * pow_bracket(inputs.Ln, -eln, tol)
    )
    m_int = math.ceil(bound.hi)
    return BoundReport(
        theorem="matsusaka-main",
        inputs={
            "n": n,
            "Ln": inputs.Ln,
            "LB": inputs.LB,
            "LK": inputs.LK,
            "LH": LH,
            "LBH": LBH,
            "lambda": lambda_n(n, inputs.lambda_policy)
            if inputs.LH is None
            else None,
        },
        threshold=bound,
        verdict=f"mL-B very ample for all integers m >= {m_int}",
        details={"m_integer": m_int, "exponents": {"pre": pre, "LBH": ebh, "LH": eh, "Ln": eln}},
    )


def matsusaka_very_ample(
    n: int,
    Ln: QLike,
    LK: QLike,
    policy: Union[str, int] = "demailly",
    tol: QLike = Fraction(1, 10**12),
) -> Bracket:
    """Closed form of the B = 0 case: mL very ample for
    m >= (2n)^((3^(n-1)-1)/2) lambda_n^e (L^n)^(3^(n-2)) (n+2+LK/L^n)^e
    with e = 3^(n-2)(n/2 + 3/4) + 1/4."""
    if n < 2:
        raise ValueError("need n >= 2")
    Ln, LK, tol = Fraction(Ln), Fraction(LK), Fraction(tol)
    if Ln < 1:
        raise ValueError("L^n must be >= 1")
    lam = lambda_n(n, policy)
    e = 3 ** (n - 2) * (Fraction(n, 2) + Fraction(3, 4)) + Fraction(1, 4)
    pre = Fraction(3 ** (n - 1) - 1, 2)
    return (
        pow_bracket(Fraction(2 * n), pre, tol)
        * pow_bracket(Fraction(lam), e, tol)
        * pow_bracket(Ln, Fraction(3 ** (n - 2)), tol)
        * pow_bracket(n + 2 + LK / Ln, e, tol)
    )


def mbar_recursion(
    n: int, M: QLike, LH: QLike, Ln: QLike
) -> tuple[list[Fraction], list[Fraction], bool]:
    """Auxiliary sequence for the main bound, both ways.

    Recursive: mbar_n = M/L^n, mbar_p = M (LH)^p / (L^n)^(p-1) *
    (mbar_{p+1} ... mbar_n)^2.  Closed form: mbar_p = M^(3^(n-p))
    (LH)^((3^(n-p-1)(2n-3)+1)/2) / (L^n)^((3^(n-p-1)(2n-1)+1)/2).
    Returns (recursive list for p = n..1, closed-form list, exact-agreement
    flag); all exponents are integers so both paths are exact rationals.
    """
    M, LH, Ln = Fraction(M), Fraction(LH), Fraction(Ln)
    if min(M, LH, Ln) <= 0:
        raise ValueError("M, LH, L^n must be positive")
    rec = [M / Ln]  # index 0 holds mbar_n
    for p in range(n - 1, 0, -1):
        tail_sq = math.prod(rec) ** 2
        rec.append(M * LH ** p / Ln ** (p - 1) * tail_sq)
    closed = []
    for p in range(n, 0, -1):
        if p == n:
            closed.append(M / Ln)
            continue
        eh = (3 ** (n - p - 1) * (2 * n - 3) + 1) // 2
        el = (3 ** (n - p - 1) * (2 * n - 1) + 1) // 2
        closed.append(M ** (3 ** (n - p)) * LH ** eh / Ln ** el)
    return rec, closed, rec == closed


def m0_assembly(mbars: list[Fraction], LBH: QLike) -> Fraction:
    """m0 = max(mbar_n, ..., mbar_2, (mbar_2 ... mbar_n) * L^(n-1).(B+H))."""
    if not mbars:
        raise ValueError("need at least one mbar value")
    vals = [Fraction(m) for m in mbars]
    return max(max(vals), math.prod(vals) * Fraction(LBH))


def fdb_surface_bound(L2: QLike, LKp4L: QLike) -> tuple[Fraction, Fraction]:
    """Surface thresholds for mL very ample: the sharper bound
    ((L.(K+4L) + 1)^2 / L^2 + 3) / 2 (strict), paired with the factor-4
    bound 4 (L.(K+4L))^2 / L^2 from the general formula."""
    L2 = Fraction(L2)
    if L2 < 1:
        raise ValueError("L^2 must be >= 1")
    LKp4L = Fraction(LKp4L)
    fdb = ((LKp4L + 1) ** 2 / L2 + 3) / 2
    factor4 = 4 * LKp4L ** 2 / L2
    return fdb, factor4
