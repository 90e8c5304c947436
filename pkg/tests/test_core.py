"""Unit and property tests for rationals, brackets, and rational powers."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from posbounds.core import (
    Bracket,
    binom,
    bracket_min,
    bracket_prod,
    ceil_q,
    elem_sym,
    floor_q,
    iroot,
    nth_root_bracket,
    pow_bracket,
)

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=100)
pos_rationals = st.fractions(min_value=Fraction(1, 100), max_value=1000, max_denominator=100)


def test_binom_matches_comb_inside_range():
    assert binom(7, 2) == 21
    assert binom(10, 3) == 120
    assert binom(0, 0) == 1


def test_binom_zero_outside_range():
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0


@given(st.lists(rationals, min_size=1, max_size=6))
def test_elem_sym_newton_identity(values):
    # S_j over (values + [v]) = S_j(values) + v * S_{j-1}(values)
    v = Fraction(3, 7)
    extended = list(values) + [v]
    for j in range(1, len(extended) + 1):
        lhs = elem_sym(extended, j)
        rhs = elem_sym(values, j) if j <= len(values) else Fraction(0)
        rhs += v * (elem_sym(values, j - 1) if j - 1 <= len(values) else Fraction(0))
        assert lhs == rhs


def test_elem_sym_bounds_checked():
    assert elem_sym([1, 2], 0) == 1
    assert elem_sym([1, 2], 2) == 2
    with pytest.raises(ValueError):
        elem_sym([1, 2], 3)


def test_floor_ceil():
    assert floor_q(Fraction(7, 2)) == 3
    assert ceil_q(Fraction(7, 2)) == 4
    assert floor_q(-Fraction(7, 2)) == -4


@given(st.integers(min_value=0, max_value=10**12), st.integers(min_value=1, max_value=7))
def test_iroot_floor_contract(a, q):
    r, exact = iroot(a, q)
    assert r**q <= a < (r + 1) ** q
    assert exact == (r**q == a)


def test_bracket_rejects_reversed_endpoints():
    with pytest.raises(ValueError):
        Bracket(Fraction(1), Fraction(0))


@given(rationals, rationals, rationals, rationals)
def test_bracket_arithmetic_soundness(a, b, c, d):
    x = Bracket(min(a, b), max(a, b))
    y = Bracket(min(c, d), max(c, d))
    # Endpoints are members, so their images must land inside the result.
    for xv in (x.lo, x.hi):
        for yv in (y.lo, y.hi):
            assert (x + y).contains(xv + yv)
            assert (x - y).contains(xv - yv)
            assert (x * y).contains(xv * yv)


@given(rationals, rationals, pos_rationals, pos_rationals)
def test_bracket_division_soundness(a, b, c, d):
    x = Bracket(min(a, b), max(a, b))
    y = Bracket(min(c, d), max(c, d))
    for xv in (x.lo, x.hi):
        for yv in (y.lo, y.hi):
            assert (x / y).contains(xv / yv)


def test_bracket_division_rejects_zero_straddle():
    with pytest.raises(ZeroDivisionError):
        Bracket(Fraction(1), Fraction(1)) / Bracket(Fraction(-1), Fraction(1))


def test_bracket_min_and_prod():
    a = Bracket(Fraction(1), Fraction(2))
    b = Bracket(Fraction(3, 2), Fraction(7, 4))
    m = bracket_min([a, b])
    assert m.lo == 1 and m.hi == Fraction(7, 4)
    p = bracket_prod([a, 2])
    assert p.lo == 2 and p.hi == 4


@given(
    st.fractions(min_value=0, max_value=10**6, max_denominator=10**4),
    st.integers(min_value=1, max_value=6),
)
def test_nth_root_bracket_encloses_and_is_tight(r, q):
    tol = Fraction(1, 10**9)
    b = nth_root_bracket(r, q, tol)
    assert b.lo**q <= r <= b.hi**q
    assert b.is_point or b.width <= tol


@given(st.integers(min_value=0, max_value=50), st.integers(min_value=1, max_value=5))
def test_nth_root_bracket_exact_on_perfect_powers(base, q):
    b = nth_root_bracket(Fraction(base**q), q, Fraction(1, 10**6))
    assert b.is_point and b.lo == base


def test_nth_root_monotone_refinement():
    wide = nth_root_bracket(Fraction(2), 2, Fraction(1, 10**3))
    tight = nth_root_bracket(Fraction(2), 2, Fraction(1, 10**9))
    assert wide.lo <= tight.lo and tight.hi <= wide.hi
    assert tight.width < wide.width


@given(
    st.fractions(min_value=Fraction(1, 50), max_value=100, max_denominator=50),
    st.fractions(min_value=-3, max_value=3, max_denominator=6),
)
def test_pow_bracket_encloses_true_value(x, e):
    b = pow_bracket(x, e, Fraction(1, 10**9))
    true = float(x) ** float(e)
    assert float(b.lo) - 1e-6 <= true <= float(b.hi) + 1e-6


def test_pow_bracket_integer_exponent_exact():
    b = pow_bracket(Fraction(3, 2), Fraction(3), Fraction(1, 10**6))
    assert b.is_point and b.lo == Fraction(27, 8)
    b = pow_bracket(Fraction(4), Fraction(-1, 2), Fraction(1, 10**6))
    assert b.is_point and b.lo == Fraction(1, 2)


def test_pow_bracket_domain_errors():
    with pytest.raises(ValueError):
        pow_bracket(Fraction(-1), Fraction(1, 2), Fraction(1, 10**6))
    with pytest.raises(ValueError):
        pow_bracket(Fraction(0), Fraction(-1), Fraction(1, 10**6))


def test_pow_bracket_zero_and_one():
    assert pow_bracket(0, Fraction(1, 2), Fraction(1, 10**6)).lo == 0
    assert pow_bracket(1, Fraction(7, 3), Fraction(1, 10**6)).lo == 1


def test_golden_sqrt5_bracket():
    b = pow_bracket(Fraction(5), Fraction(1, 2), Fraction(1, 10**12))
    assert abs(float(b.lo) - math.sqrt(5)) < 1e-11
