from __future__ import annotations

import random
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammacf.cfrac import (CFFamily, Family, JFraction, family_jfraction,
                           jacobi_rogers, jf_moments, pqint_at, qint_at)
from gammacf.colored import D_poly, d_poly
from gammacf.poly import Poly


def test_catalan_and_motzkin():
    cat = jf_moments(JFraction((0,) * 6, (1,) * 6), 10)
    assert cat[::2] == [1, 1, 2, 5, 14, 42]
    assert all(m == 0 for m in cat[1::2])
    motz = jf_moments(JFraction((1,) * 6, (1,) * 6), 6)
    assert motz == [1, 1, 2, 4, 9, 21, 51]


def test_r_euler():
    for r in range(1, 5):
        mu = jf_moments(family_jfraction(CFFamily(Family.R_EULER, {"r": r}), 8), 8)
        assert mu == [factorial(n) * r ** n for n in range(9)]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=5, max_size=5),
       st.lists(st.integers(-4, 4), min_size=4, max_size=4))
def test_jacobi_rogers_matches_dp(b, lam):
    jf = JFraction(tuple(b), tuple(lam))
    mu = jf_moments(jf, 8)
    assert [jacobi_rogers(jf, n) for n in range(9)] == mu


@pytest.mark.parametrize("r", [1, 2, 3])
def test_derangement_fractions(r):
    D = jf_moments(family_jfraction(CFFamily(Family.DERANGE_D, {"r": r}), 6), 6)
    d = jf_moments(family_jfraction(CFFamily(Family.DERANGE_d, {"r": r}), 6), 6)
    for n in range(7):
        assert D[n] == D_poly(n, r)
        assert d[n] == d_poly(n, r)


def test_polynomial_coefficients():
    t = Poly.gen()
    assert qint_at(3, t) == 1 + t + t ** 2
    assert pqint_at(3, 2, 3) == 9 + 6 + 4


def test_family_validation():
    with pytest.raises(ValueError):
        CFFamily(Family.B_FULL, {"p": 1})
    with pytest.raises(ValueError):
        CFFamily(Family.R_EULER, {"r": 2, "zz": 1})


def test_insufficient_coefficients():
    with pytest.raises(ValueError):
        jf_moments(JFraction((1,), ()), 6)


def test_sz12_family_counts_permutations():
    mu = jf_moments(family_jfraction(
        CFFamily(Family.SZ12_A, dict(p=1, q=1, t=1, u=1, v=1, w=1)), 6), 6)
    assert mu == [factorial(n + 1) for n in range(7)]


def test_wreath_family_counts_colored_permutations():
    for r in (1, 2, 3):
        params = dict(r=r, q=1, t=1, tt=1, w=1, wt=1, x=1, xt=1, y=1, yt=1)
        mu = jf_moments(family_jfraction(CFFamily(Family.WREATH, params), 6), 6)
        assert mu == [factorial(n) * r ** n for n in range(7)]


def test_moments_in_rationals():
    rng = random.Random(7)
    from fractions import Fraction
    jf = JFraction(tuple(Fraction(rng.randint(1, 5), 3) for _ in range(4)),
                   tuple(Fraction(rng.randint(1, 5), 2) for _ in range(3)))
    mu = jf_moments(jf, 6)
    assert [jacobi_rogers(jf, n) for n in range(7)] == mu
