"""Tests for the convexity inequalities and Morse-type counting."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from posbounds.convexity import (
    MixedNumbers,
    Verdict,
    diag_form_check,
    ht_mixed_chain,
    ht_products,
    morse_existence_threshold,
    morse_strong_rhs,
    singular_morse_Aq,
    trapani_lower,
)
from posbounds.core import Bracket
from posbounds.projective import DivisorClass, ProductSpace, h0, top_intersection

pos = st.fractions(min_value=Fraction(1, 10), max_value=100, max_denominator=20)


def test_ht_products_exact_holds():
    # u_j^2 = (1, 4), mixed u_1.u_2 = 2 on the quadric with (1,0) and (0,2)?
    # Simplest: equal classes give equality.
    res = ht_products([4, 4], 4)
    assert res.verdict is Verdict.HOLDS and res.equality


def test_ht_products_exact_violated_flags_bad_data():
    res = ht_products([9, 9], 2)
    assert res.verdict is Verdict.VIOLATED


def test_ht_products_on_fixture():
    # P^1 x P^1, u1 = (1, 2), u2 = (2, 1): mixed = 5, selfints = 4 and 4.
    S = ProductSpace((1, 1))
    u1 = DivisorClass(S, (1, 2))
    u2 = DivisorClass(S, (2, 1))
    mixed = top_intersection([u1, u2])
    s1 = top_intersection([u1, u1])
    s2 = top_intersection([u2, u2])
    res = ht_products([s1, s2], mixed)
    assert res.verdict is Verdict.HOLDS and not res.equality


def test_ht_products_bracket_inputs():
    res = ht_products([Bracket(Fraction(1), Fraction(2)), 4], 10)
    assert res.verdict is Verdict.HOLDS
    res = ht_products([Bracket(Fraction(8), Fraction(9)), 9], 1)
    assert res.verdict is Verdict.VIOLATED


def test_ht_products_rejects_negative():
    with pytest.raises(ValueError):
        ht_products([-1, 4], 2)


@given(pos, pos, st.integers(min_value=2, max_value=5), st.integers(min_value=1, max_value=5))
def test_ht_chain_on_consistent_powers(L, H, n, p):
    # For L, H multiples of a common ample class the chain is an equality.
    if p > n:
        p = n
    Ln = L**n
    LH = L ** (n - 1) * H
    LnpHp = L ** (n - p) * H**p
    res = ht_mixed_chain(Ln, LH, LnpHp, n, p)
    assert res.verdict is Verdict.HOLDS and res.equality


def test_ht_chain_violated():
    # L^n = 1, LH = 1 but L^(n-2).H^2 = 5 is impossible for nef classes.
    res = ht_mixed_chain(1, 1, 5, 3, 2)
    assert res.verdict is Verdict.VIOLATED


def test_diag_form_equality_iff_all_equal():
    res = diag_form_check([2, 2, 2], 2)
    assert res.verdict is Verdict.HOLDS and res.equality
    res = diag_form_check([1, 2, 3], 2)
    assert res.verdict is Verdict.HOLDS and not res.equality


@given(st.lists(pos, min_size=1, max_size=5), st.integers(min_value=0, max_value=5))
def test_diag_form_never_violated(lambdas, p):
    p = min(p, len(lambdas))
    res = diag_form_check(lambdas, p)
    assert res.verdict is Verdict.HOLDS
    # p = 0 and p = n are equalities for any data; in between equality
    # happens exactly on the diagonal.
    assert res.equality == (len(set(lambdas)) == 1 or p == 0 or p == len(lambdas))


def test_diag_form_rejects_nonpositive():
    with pytest.raises(ValueError):
        diag_form_check([0, 1], 1)


def test_morse_strong_rhs_alternating_sum():
    mixed = MixedNumbers.of(2, {0: 9, 1: 3, 2: 1})
    # q=1: -C(2,0)*9 + C(2,1)*3 = -3.
    assert morse_strong_rhs(mixed, 1) == -3
    assert morse_strong_rhs(mixed, 0) == 9
    with pytest.raises(KeyError):
        morse_strong_rhs(MixedNumbers.of(2, {0: 9}), 1)


def test_morse_existence_threshold_strict():
    # n FG / Fn = 3 exactly: strict means m = 4.
    assert morse_existence_threshold(2, 3, 2) == 4
    assert morse_existence_threshold(5, 3, 2) == 2
    with pytest.raises(ValueError):
        morse_existence_threshold(0, 1, 2)


def test_morse_threshold_sufficient_on_product_fixture():
    # P^1 x P^1: F = a(H1+H2), G = b1 H1 + b2 H2; mF - G has a section
    # iff m a >= max(b1, b2).
    S = ProductSpace((1, 1))
    for a, b1, b2 in [(1, 3, 7), (2, 5, 1), (3, 10, 10)]:
        F = DivisorClass(S, (a, a))
        G = DivisorClass(S, (b1, b2))
        Fn = top_intersection([F, F])
        FG = top_intersection([F, G])
        m = morse_existence_threshold(Fn, FG, 2)
        mFmG = m * F - G
        assert h0(mFmG) > 0


def test_trapani_lower():
    assert trapani_lower(10, 3, 2) == 4
    assert trapani_lower(10, 6, 2) == -2


def test_singular_morse_Aq():
    assert singular_morse_Aq(3, 0, Fraction(1, 2), 6) == 1
    assert singular_morse_Aq(3, 1, 0, 99) == 0
    val = singular_morse_Aq(2, 1, Fraction(1, 2), 4)
    assert val == Fraction(1, 2) * 4 / (1 * 1)
    with pytest.raises(ValueError):
        singular_morse_Aq(2, 3, 1, 1)
