from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammacf.poly import (NotGammaExpressible, Poly, TruncSeries, binomial,
                          bipoly_from_json, bipoly_to_json, eval_AS_form,
                          expand_SZ_basis, gamma_expand, gamma_reconstruct,
                          is_spiral, is_strictly_unimodal_to, is_symmetric,
                          is_unimodal, poly_from_json, poly_to_json, pq_int,
                          q_int, series_exp)

t = Poly.gen()


def test_trailing_zeros_and_equality():
    assert Poly([1, 2, 0, 0]) == Poly([1, 2])
    assert Poly() == 0
    assert Poly.const(3) == 3
    assert Poly().degree == -1


def test_arithmetic():
    p = (1 + t) ** 3
    assert p.coeffs == (1, 3, 3, 1)
    assert (p - t ** 3).coeffs == (1, 3, 3)
    assert (2 * p).coeffs == (2, 6, 6, 2)
    assert p(2) == 27
    assert t.shift(2) == t ** 3
    assert (1 + t).inflate(3) == 1 + t ** 3


def test_divmod_monic():
    p = (1 + t) ** 2 * (t ** 2 + 3)
    quo, rem = p.divmod_monic(1 + t)
    assert rem == 0 and quo == (1 + t) * (t ** 2 + 3)
    assert p.divisible_by((1 + t) ** 2)
    assert not p.divisible_by((1 + t) ** 3)


def test_q_integers():
    assert q_int(3).coeffs == (1, 1, 1)
    assert q_int(0) == 0
    # [3]_{p,q} = p^2 + pq + q^2 as a polynomial in p over Z[q]
    val = pq_int(3)
    assert val(Poly.const(2)) == 4 + 2 * t + t ** 2


def test_gamma_expand_eulerian():
    a4 = Poly([1, 11, 11, 1])
    gv = gamma_expand(a4, 3)
    assert list(gv.gammas) == [1, 8]
    assert gv.reconstruct() == a4


def test_gamma_expand_rejects_asymmetric():
    with pytest.raises(NotGammaExpressible) as err:
        gamma_expand(Poly([1, 2, 1]), 3)
    assert err.value.residual != 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 9).flatmap(
    lambda d: st.tuples(st.just(d), st.lists(st.integers(-50, 50),
                                             min_size=d // 2 + 1, max_size=d // 2 + 1))))
def test_gamma_round_trip(case):
    d, gammas = case
    p = gamma_reconstruct(gammas, d)
    assert list(gamma_expand(p, d).gammas) == gammas


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(-20, 20), min_size=n + 1, max_size=n + 1))))
def test_sz_round_trip(case):
    n, coeffs = case
    one_t2 = Poly([1, 0, 1])
    p = sum(((one_t2 ** (n - k)).shift(k) * c for k, c in enumerate(coeffs)), Poly())
    assert list(expand_SZ_basis(p, n)) == coeffs


def test_as_form():
    # t^ceil(k/2)(1+t)^(n-k) at n = 2 with coefficients (0, 1, 3)
    assert eval_AS_form([0, 1, 3], 2) == t * (1 + t) + 3 * t
    with pytest.raises(ValueError):
        eval_AS_form([1, 2], 3)


def test_series_exp_matches_exp_linear():
    N = 8
    a = TruncSeries([0, 1 - t], N)
    assert series_exp(a) == TruncSeries.exp_linear(1 - t, N)


def test_egf_product():
    N = 6
    e1 = TruncSeries.exp_linear(1, N)
    em1 = TruncSeries.exp_linear(-1, N)
    assert (e1 * em1).first_mismatch(TruncSeries([1], N)) is None
    assert TruncSeries.from_egf([1] * 7, N) == e1
    assert e1[3] == Fraction(1, 6)


def test_shape_checks():
    assert is_symmetric([1, 4, 1], 2)
    assert not is_symmetric([1, 4, 2], 2)
    assert is_symmetric([0, 1, 1], 3)
    assert is_unimodal([1, 3, 3, 2])
    assert not is_unimodal([1, 3, 1, 2])
    assert is_strictly_unimodal_to([1, 2, 3, 3], 2)
    assert not is_strictly_unimodal_to([1, 2, 2], 2)
    assert is_spiral([0, 16, 144, 72, 1], 4)
    assert not is_spiral([0, 16, 144, 72, 100], 4)


def test_json_round_trip():
    p = Poly([1, Fraction(-2, 3), 5])
    doc = poly_to_json(p, "t")
    assert doc == {"var": "t", "coeffs": [1, "-2/3", 5]}
    assert poly_from_json(doc) == p
    bi = Poly([Poly([1, 2]), 0, Poly([0, 0, 3])])
    doc2 = bipoly_to_json(bi)
    assert doc2["coeffs"] == [[1, 2], [], [0, 0, 3]]
    assert bipoly_from_json(doc2) == bi


def test_binomial_convention():
    assert binomial(-1, -1) == 1
    assert binomial(3, -1) == 0
    assert binomial(5, 2) == 10
    assert binomial(2, 5) == 0
