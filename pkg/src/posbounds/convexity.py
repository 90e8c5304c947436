"""Hovanski-Teissier convexity inequalities and algebraic Morse criteria.

The n-th-root inequalities are decided exactly by raising both sides to an
integer power whenever the inputs are rational; bracket arithmetic (with one
automatic refinement before surfacing Unknown) is used only when the caller
supplies genuine intervals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .core import Bracket, QLike, binom, bracket_prod, elem_sym, pow_bracket


class Verdict(Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class InequalityResult:
    verdict: Verdict
    slack: Bracket  # LHS minus RHS of the certified inequality
    equality: bool = False


@dataclass(frozen=True)
class MixedNumbers:
    """Mixed intersection products F^(n-j) . G^j for j = 0..n."""

    n: int
    values: Mapping[int, Fraction]

    @staticmethod
    def of(n: int, values: Mapping[int, QLike]) -> "MixedNumbers":
        return MixedNumbers(n, {j: Fraction(v) for j, v in values.items()})

    def __getitem__(self, j: int) -> Fraction:
        if j not in self.values:
            raise KeyError(f"mixed product F^{self.n - j}.G^{j} not supplied")
        return self.values[j]


def ht_products(
    selfints: Sequence[Union[Bracket, QLike]],
    mixed: QLike,
    tol: QLike = Fraction(1, 10**12),
) -> InequalityResult:
    """Certify u_1...u_n >= (u_1^n)^(1/n) ... (u_n^n)^(1/n) for nef classes.

    A Violated verdict flags nef-inconsistent input data.
    """
    n = len(selfints)
    mixed = Fraction(mixed)
    exact_inputs = [s for s in selfints if not isinstance(s, Bracket)]
    if len(exact_inputs) == n:
        vals = [Fraction(s) for s in exact_inputs]
        if any(v < 0 for v in vals):
            raise ValueError("self-intersections of nef classes must be nonnegative")
        prod = math.prod(vals)
        # mixed >= prod^(1/n)  <=>  mixed^n >= prod (mixed >= 0 for nef data)
        if mixed < 0:
            verdict = Verdict.VIOLATED
        else:
            lhs, rhs = mixed ** n, prod
            verdict = Verdict.HOLDS if lhs >= rhs else Verdict.VIOLATED
        slack = Bracket.point(mixed) - _geometric_mean_bracket(vals, Fraction(tol))
        return InequalityResult(verdict, slack, equality=mixed >= 0 and mixed ** n == prod)
    brackets = [b if isinstance(b, Bracket) else Bracket.point(b) for b in selfints]
    if any(b.lo < 0 for b in brackets):
        raise ValueError("self-intersections of nef classes must be nonnegative")
    tol = Fraction(tol)
    for attempt_tol in (tol, tol / 1024):
        gm = bracket_prod(pow_bracket_interval(b, Fraction(1, n), attempt_tol) for b in brackets)
        slack = Bracket.point(mixed) - gm
        if slack.lo >= 0:
            return InequalityResult(Verdict.HOLDS, slack)
        if slack.hi < 0:
            return InequalityResult(Verdict.VIOLATED, slack)
    return InequalityResult(Verdict.UNKNOWN, slack)


def pow_bracket_interval(b: Bracket, e: Fraction, tol: Fraction) -> Bracket:
    """x^e over an interval of nonnegative x (monotone for e > 0)."""
    if e <= 0:
        raise ValueError("interval powers only implemented for positive exponents")
    lo = pow_bracket(b.lo, e, tol)
    hi = pow_bracket(b.hi, e, tol)
    return Bracket(lo.lo, hi.hi)


def _geometric_mean_bracket(vals: Sequence[Fraction], tol: Fraction) -> Bracket:
    n = len(vals)
    return bracket_prod(pow_bracket(v, Fraction(1, n), tol) for v in vals)


def ht_mixed_chain(Ln: QLike, LH: QLike, LnpHp: QLike, n: int, p: int) -> InequalityResult:
    """Certify (L^(n-p).H^p)^(1/p) (L^n)^(1-1/p) <= L^(n-1).H.

    Decided exactly: for nonnegative data the inequality is equivalent to
    (L^(n-p).H^p) * (L^n)^(p-1) <= (L^(n-1).H)^p.
    """
    if not (1 <= p <= n):
        raise ValueError("need 1 <= p <= n")
    Ln, LH, LnpHp = Fraction(Ln), Fraction(LH), Fraction(LnpHp)
    if min(Ln, LH, LnpHp) < 0:
        raise ValueError("intersection numbers must be nonnegative")
    lhs_p = LnpHp * Ln ** (p - 1)
    rhs_p = LH ** p
    verdict = Verdict.HOLDS if lhs_p <= rhs_p else Verdict.VIOLATED
    slack = Bracket.point(rhs_p - lhs_p)
    return InequalityResult(verdict, slack, equality=lhs_p == rhs_p)


def diag_form_check(lambdas: Sequence[QLike], p: int) -> InequalityResult:
    """Certify p!(n-p)! S_p(lambda) >= n! (lambda_1...lambda_n)^(p/n),
    with exact equality detection (equality iff all lambda equal)."""
    vals = [Fraction(v) for v in lambdas]
    if any(v <= 0 for v in vals):
        raise ValueError("eigenvalues must be positive")
    n = len(vals)
    if not (0 <= p <= n):
        raise ValueError("need 0 <= p <= n")
    lhs = math.factorial(p) * math.factorial(n - p) * elem_sym(vals, p)
    prod = math.prod(vals)
    # lhs >= n! prod^(p/n)  <=>  lhs^n >= (n!)^n prod^p  (both sides positive)
    lhs_n = lhs ** n
    rhs_n = Fraction(math.factorial(n)) ** n * prod ** p
    verdict = Verdict.HOLDS if lhs_n >= rhs_n else Verdict.VIOLATED
    slack = Bracket.point(lhs_n - rhs_n)
    return InequalityResult(verdict, slack, equality=lhs_n == rhs_n)


def morse_strong_rhs(mixed: MixedNumbers, q: int) -> Fraction:
    """Right side of the asymptotic strong Morse inequality (coefficient of
    k^n/n!): sum over j <= q of (-1)^(q-j) C(n,j) F^(n-j).G^j."""
    if not (0 <= q <= mixed.n):
        raise ValueError("need 0 <= q <= n")
    return sum(
        ((-1) ** (q - j)) * binom(mixed.n, j) * mixed[j] for j in range(q + 1)
    )


def morse_existence_threshold(Fn: QLike, FG: QLike, n: int) -> int:
    """Smallest integer m with m > n * F^(n-1).G / F^n (strict); some
    multiple of mF - G then has a section."""
    Fn, FG = Fraction(Fn), Fraction(FG)
    if Fn <= 0:
        raise ValueError("F^n must be positive (F big)")
    if FG < 0:
        raise ValueError("F^(n-1).G must be nonnegative")
    return math.floor(n * FG / Fn) + 1


def trapani_lower(Fn: QLike, FG: QLike, n: int) -> Fraction:
    """Lower bound F^n - n F^(n-1).G for n!(h^0 - h^1)/k^n; positive means
    some multiple of F - G has sections."""
    return Fraction(Fn) - n * Fraction(FG)


def singular_morse_Aq(n: int, q: int, b: QLike, cup_uq_times: QLike) -> Fraction:
    """Cohomology growth constant A_q = b^q * [u^q.(c1(L)+b u)^(n-q)] / (q!(n-q)!).

    The cup product u^q.(c1(L)+b u)^(n-q) is caller-supplied; b is the
    jumping value b_(n-q+1).
    """
    if not (0 <= q <= n):
        raise ValueError("need 0 <= q <= n")
    b = Fraction(b)
    if b < 0:
        raise ValueError("jumping value must be nonnegative")
    if b == 0 and q >= 1:
        return Fraction(0)
    return b ** q * Fraction(cup_uq_times) / (math.factorial(q) * math.factorial(n - q))
