"""Jumping values of singular metrics: the sigma sequence, the recursive
bound on successive jumps, the main numerical criterion, and the derived
global-generation thresholds.

Sigma values involve the n-th root (1 - sigma0/L^n)^(p/n) and are certified
Brackets; everything downstream keeps the bracket and rounds toward the safe
side of each strict inequality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .core import Bracket, QLike, bracket_min, elem_sym, pow_bracket
from .report import BoundReport

from .adjoint import JetSpec


@dataclass(frozen=True)
class JumpSequence:
    """Nondecreasing jumping values b_1 <= ... <= b_{n+1} with b_1 = 0."""

    b: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.b or self.b[0] != 0:
            raise ValueError("jump sequence must start at 0")
        if any(x < 0 for x in self.b):
            raise ValueError("jumping values must be nonnegative")
        if any(y < x for x, y in zip(self.b, self.b[1:])):
            raise ValueError("jumping values must be nondecreasing")

    @staticmethod
    def of(*values: QLike) -> "JumpSequence":
        return JumpSequence(tuple(Fraction(v) for v in values))


@dataclass(frozen=True)
class SigmaSequence:
    """sigma0 together with certified brackets for sigma_1..sigma_{n-1}."""

    n: int
    sigma0: Fraction
    sigma_p: tuple[Bracket, ...]

    def __getitem__(self, p: int) -> Bracket:
        if p == 0:
            return Bracket.point(self.sigma0)
        if not (1 <= p <= len(self.sigma_p)):
            raise KeyError(f"sigma_{p} not available")
        return self.sigma_p[p - 1]


def sigma0_for(jets: JetSpec, n: int, very_ample_special: bool = False) -> Fraction:
    """sigma0 = sum (n + s_j)^n; the single-point 1-jet case admits the
    sharper value 2 n^n when very_ample_special is requested."""
    if not jets.orders:
        raise ValueError("need at least one jet order")
    if very_ample_special and jets.orders == (1,):
        return Fraction(2 * n ** n)
    return Fraction(sum((n + s) ** n for s in jets.orders))


def sigma0_very_ample_readings(n: int) -> dict[str, int]:
    """Both published sigma0 values for very ampleness; neither is silently
    preferred."""
    return {"improved": 2 * n ** n, "max_reading": max(2 * n ** n, (n + 1) ** n)}


def sigma_sequence(
    sigma0: QLike, Ln: QLike, n: int, tol: QLike = Fraction(1, 10**12)
) -> SigmaSequence:
    """sigma_p = (1 - (1 - sigma0/L^n)^(p/n)) L^n for p = 1..n-1.

    Post-checked (bracket-certified, with refinement): sigma0 p/n < sigma_p
    < sigma0, and the sequence is strictly increasing in p.
    """
    sigma0, Ln, tol = Fraction(sigma0), Fraction(Ln), Fraction(tol)
    if not (0 < sigma0 < Ln):
        raise ValueError("need 0 < sigma0 < L^n")
    q = 1 - sigma0 / Ln
    for attempt_tol in (tol, tol / 1024, tol / 1024 ** 2):
        sigmas = []
        for p in range(1, n):
            root = pow_bracket(q, Fraction(p, n), attempt_tol)
            sigmas.append((Bracket.point(1) - root) * Bracket.point(Ln))
        ok = all(s.lo > sigma0 * p / n and s.hi < sigma0 for p, s in enumerate(sigmas, 1))
        ok = ok and all(a.hi < b.lo for a, b in zip(sigmas, sigmas[1:]))
        if ok:
            return SigmaSequence(n, sigma0, tuple(sigmas))
    raise ArithmeticError("could not certify sigma bounds at the given tolerance")


def _rhs_bracket(
    b_prefix: Sequence[Fraction], a: Fraction, sigma: SigmaSequence, minY: int
) -> Bracket:
    """(1/minY) sum_{j=0..p-1} S_j(b) a^j sigma_{p-j} as a bracket."""
    p = len(b_prefix)
    total = Bracket.point(Fraction(0))
    for j in range(p):
        coeff = elem_sym(list(b_prefix), j) * a ** j
        total = total + Bracket.point(coeff) * sigma[p - j]
    return total * Bracket.point(Fraction(1, minY))


def recursion_bound(
    b_prefix: Sequence[QLike],
    a: QLike,
    sigma: SigmaSequence,
    minY: int,
    tol: QLike = Fraction(1, 10**12),
) -> Bracket:
    """Bracket for the next jumping value b_{p+1}: the unique x > b_p with
    (x - b_1)...(x - b_p) equal to the recursion right-hand side."""
    b = [Fraction(x) for x in b_prefix]
    a = Fraction(a)
    if a < 0:
        raise ValueError("a must be nonnegative")
    if minY < 1:
        raise ValueError("minY must be a positive integer")
    if not b or b[0] != 0 or any(y < x for x, y in zip(b, b[1:])):
        raise ValueError("b_prefix must be nondecreasing and start at 0")
    rhs = _rhs_bracket(b, a, sigma, minY)
    p = len(b)
    if p == 1:
        return Bracket(b[0] + rhs.lo, b[0] + rhs.hi)
    lo_root = _increasing_root(b, rhs.lo, Fraction(tol))
    hi_root = _increasing_root(b, rhs.hi, Fraction(tol))
    return Bracket(lo_root.lo, hi_root.hi)


def _increasing_root(b: Sequence[Fraction], target: Fraction, tol: Fraction) -> Bracket:
    """Solve prod(x - b_j) = target for x > b[-1] by bisection."""

    def f(x: Fraction) -> Fraction:
        return math.prod(x - bj for bj in b)

    lo = b[-1]
    hi = lo + 1
    while f(hi) < target:
        hi = lo + 2 * (hi - lo)
    # f(lo) = 0 <= target <= f(hi), f strictly increasing on [lo, hi]
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if f(mid) <= target:
            lo = mid
        else:
            hi = mid
    return Bracket(lo, hi)


def main_theorem_check(
    n: int,
    sigma0: QLike,
    a: QLike,
    beta: Sequence[QLike],
    minY: Mapping[int, int],
    Ln: QLike,
    tol: QLike = Fraction(1, 10**12),
    nef_twist: bool = False,
) -> BoundReport:
    """Main numerical criterion: L^n > sigma0 and, for each p = 1..n-1,
    the declared min of L^(n-p).Y over p-dimensional subvarieties strictly
    exceeds prod_j (beta_{p+1}-beta_j)^(-1) sum_j S_j(beta) a^j sigma_{p-j}.

    Brackets are rounded up on the threshold side.  A missing minY entry
    makes the report unsatisfied (the inequality cannot be certified).
    """
    sigma0, a, Ln = Fraction(sigma0), Fraction(a), Fraction(Ln)
    betas = [Fraction(x) for x in beta]
    if len(betas) != n or betas[0] != 0 or any(
        y <= x for x, y in zip(betas[1:], betas[2:])
    ) or (n > 1 and betas[1] <= 0) or betas[-1] > 1:
        raise ValueError("beta must satisfy 0 = beta_1 < ... < beta_n <= 1")
    inputs = {
        "n": n,
        "sigma0": sigma0,
        "a": a,
        "beta": betas,
        "minY": {str(p): v for p, v in minY.items()},
        "Ln": Ln,
    }
    details: dict = {"nef_twist": nef_twist}
    if sigma0 >= Ln:
        return BoundReport(
            theorem="jumping-main",
            inputs=inputs,
            threshold=sigma0,
            verdict="unsatisfied",
            details={**details, "reason": "L^n does not exceed sigma0"},
        )
    sigma = sigma_sequence(sigma0, Ln, n, tol)
    satisfied = True
    margins: dict[str, Fraction] = {}
    for p in range(1, n):
        prefix = betas[:p]
        denom = math.prod(betas[p] - bj for bj in prefix)
        rhs = Bracket.point(Fraction(0))
        for j in range(p):
            coeff = elem_sym(prefix, j) * a ** j
            rhs = rhs + Bracket.point(coeff) * sigma[p - j]
        rhs = rhs * Bracket.point(1 / denom)
        if p not in minY:
            satisfied = False
            margins[str(p)] = None
            continue
        margins[str(p)] = Fraction(minY[p]) - rhs.hi
        if not (Fraction(minY[p]) > rhs.hi):
            satisfied = False
    details["margins"] = margins
    return BoundReport(
        theorem="jumping-main",
        inputs=inputs,
        threshold=sigma0,
        verdict="satisfied" if satisfied else "unsatisfied",
        details=details,
    )


def lemma1111_check(t: Sequence[QLike], n: int) -> bool:
    """Exact check of sum (n-1+t_j)^n <= (n-1 + sum t_j)^n for t_j >= 1."""
    vals = [Fraction(x) for x in t]
    if any(x < 1 for x in vals):
        raise ValueError("need t_j >= 1")
    return sum((n - 1 + x) ** n for x in vals) <= (n - 1 + sum(vals)) ** n


def _beta_exponent(n: int, p: int) -> Fraction:
    return Fraction(n * (n - p), p - 1)


def beta_schedule(n: int, tol: QLike = Fraction(1, 10**12)) -> list[Bracket]:
    """The standard schedule beta_p = n^(-n(n-p)/(p-1)) for 2 <= p <= n-1,
    with beta_1 = 0 and beta_n = 1.

    Strict monotonicity and the increasing-ratio property are certified on
    the exact exponents (beta_p is a pure power of n), not on the brackets.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    exps = [_beta_exponent(n, p) for p in range(2, n)]
    # beta strictly increasing <=> exponents strictly decreasing; the ratio
    # beta_p/beta_{p+1} = n^-(e_p - e_{p+1}) increases <=> gaps decrease,
    # with the final ratio beta_{n-1}/1 needing e_{n-1} <= e_{n-2} - e_{n-1}.
    if any(b >= a for a, b in zip(exps, exps[1:])):
        raise AssertionError("beta schedule is not strictly increasing")
    gaps = [a - b for a, b in zip(exps, exps[1:])]
    if any(b > a for a, b in zip(gaps, gaps[1:])):
        raise AssertionError("beta ratio is not increasing")
    if len(exps) >= 2 and exps[-1] > exps[-2] - exps[-1]:
        raise AssertionError("beta ratio is not increasing at the top")
    out = [Bracket.point(Fraction(0))]
    for e in exps:
        out.append(pow_bracket(Fraction(1, n), e, Fraction(tol)))
    out.append(Bracket.point(Fraction(1)))
    return out


def cn_constant(n: int, tol: QLike = Fraction(1, 10**12)) -> Bracket:
    """C_n = prod_{2 <= p <= n-1} (1 + (2n+1) beta_p) / (1 - beta_p) with
    beta_p = n^(-n(n-p)/(p-1)); the p=1 factor is 1 by the beta_1 = 0
    convention.  Exact rational whenever every exponent is an integer."""
    if n < 2:
        raise ValueError("need n >= 2")
    tol = Fraction(tol)
    result = Bracket.point(Fraction(1))
    for p in range(2, n):
        beta = pow_bracket(Fraction(1, n), _beta_exponent(n, p), tol)
        factor = (Bracket.point(1) + Bracket.point(2 * n + 1) * beta) / (
            Bracket.point(1) - beta
        )
        result = result * factor
    return result


def lemma1115_threshold(n: int, s: int, special: bool = False) -> int:
    """mu(L') >= 3(n+s)^n suffices for s-jets of K+L'; for s = 1 the special
    path sharpens this to 6 n^n."""
    if s < 1:
        raise ValueError("need s >= 1")
    if special:
        if s != 1:
            raise ValueError("the special threshold applies only to s = 1")
        return 6 * n ** n
    return 3 * (n + s) ** n


def theorem1117_threshold(n: int, s: int, muL: QLike, special: bool = True) -> int:
    """Smallest m >= 2 with (m-1) mu(L) + s >= 6(n+s)^n; when s = 1 the
    right side improves to 12 n^n (taken by default)."""
    if s < 1:
        raise ValueError("need s >= 1")
    mu = Fraction(muL)
    if mu <= 0:
        raise ValueError("mu(L) must be positive")
    rhs = 12 * n ** n if (special and s == 1) else 6 * (n + s) ** n
    need = Fraction(rhs - s)
    if need <= 0:
        return 2
    return max(2, math.ceil(need / mu) + 1)


def remark1120_threshold(n: int, s: int) -> int:
    """mu(L) >= 6(3n+3+2s)^n suffices for 2K+L to generate s-jets."""
    if n < 2:
        raise ValueError("need n >= 2")
    return 6 * (3 * n + 3 + 2 * s) ** n


def corollary118_table(s: int | None = None) -> dict:
    """Surface thresholds: spanned, the three separation column pairs, the
    s-jet pair (L^2 > (2+s)^2, L.C > 2+3s+s^2), and the fixed multiples
    (spanned for m >= 3, very ample for m >= 5)."""
    table: dict = {
        "spanned": (4, 2),
        "separation": ((8, 6), (9, 5), (12, 4)),
        "constants": {"spanned_m": 3, "very_ample_m": 5},
    }
    if s is not None:
        if s < 0:
            raise ValueError("jet order must be nonnegative")
        table["jets"] = ((2 + s) ** 2, 2 + 3 * s + s * s)
    return table


def mu_invariant(
    per_dim: Mapping[int, int], n: int, tol: QLike = Fraction(1, 10**12)
) -> Bracket:
    """mu(F) = min over p = 1..n of (min over p-dimensional Y of F^p.Y)^(1/p).

    Computed from declared minima only, so the result is an upper bound for
    the true infimum.  Homogeneous: scaling F^p.Y by k^p scales mu by k.
    """
    missing = [p for p in range(1, n + 1) if p not in per_dim]
    if missing:
        raise ValueError(f"missing per-dimension minima for p in {missing}")
    tol = Fraction(tol)
    roots = []
    for p in range(1, n + 1):
        v = per_dim[p]
        if v < 1:
            raise ValueError("per-dimension minima must be positive integers")
        roots.append(pow_bracket(Fraction(v), Fraction(1, p), tol))
    return bracket_min(roots)


def lemma1116_consistency(s: int, per_dim: Mapping[int, int]) -> bool:
    """A bundle generating s-jets everywhere must satisfy F^p.Y >= s^p for
    every p-dimensional subvariety; checks the declared minima."""
    if s < 0:
        raise ValueError("jet order must be nonnegative")
    return all(v >= s ** p for p, v in per_dim.items())
