from __future__ import annotations

from collections import Counter

import pytest

from gammacf import reference as ref
from gammacf.colored import (ColoredPermutation, OrderKind, all_colored,
                             b_excedance_stats, colored_stats, cros_colored,
                             D_poly, d_poly, derangements_r, letter_key)
from gammacf.poly import Poly


def test_parse_forms():
    s = ColoredPermutation.parse(ref.EXAMPLE_COLORED, 3)
    assert s.pi == (4, 7, 2, 5, 1, 6, 3)
    assert s.z == (0, 1, 0, 1, 2, 0, 0)
    assert str(s) == ref.EXAMPLE_COLORED
    b = ColoredPermutation.parse("2 -1", 2)
    assert b.signed() == (2, -1)
    with pytest.raises(ValueError):
        ColoredPermutation.parse("2 -1", 3)
    with pytest.raises(ValueError):
        ColoredPermutation((1, 2), (0, 3), 3)


def test_example_statistics():
    s = ColoredPermutation.parse(ref.EXAMPLE_COLORED, 3)
    st = colored_stats(s)
    assert (st.fixa, st.wexa, st.dropa) == (1, 2, 2)
    assert (st.fixc, st.wexc, st.dropc) == (0, 2, 1)
    assert (st.csumw, st.csumd) == (2, 2)
    assert cros_colored(s) == 6


def test_letter_orders():
    assert letter_key(3, 1, OrderKind.FRIENDS, 3) > letter_key(3, 0, OrderKind.FRIENDS, 3)
    assert letter_key(1, 2, OrderKind.COLOR, 3) < letter_key(9, 0, OrderKind.COLOR, 3)
    assert letter_key(2, 1, OrderKind.NATURAL, 2) < letter_key(1, 0, OrderKind.NATURAL, 2)
    with pytest.raises(ValueError):
        letter_key(1, 0, OrderKind.NATURAL, 3)


def test_published_derangement_polynomials():
    for n in range(1, 5):
        assert D_poly(n, 2).coeffs == tuple(ref.D2[n])
        assert d_poly(n, 2).coeffs == tuple(ref.d2[n])


@pytest.mark.parametrize("r", [1, 2, 3])
def test_dp_matches_enumeration(r):
    for n in range(0, 5):
        assert D_poly(n, r) == D_poly(n, r, method="enumerate")
        assert d_poly(n, r) == d_poly(n, r, method="enumerate")


def test_group_sizes():
    assert sum(1 for _ in all_colored(3, 3)) == 6 * 27
    # r = 1 colored derangements are ordinary derangements
    assert sum(1 for _ in derangements_r(4, 1)) == 9


def test_type_b_excedance_equidistribution():
    for n in range(1, 5):
        exc, exc_b, des_b = Counter(), Counter(), Counter()
        for s in all_colored(n, 2):
            exc[colored_stats(s).exc_friends] += 1
            b = b_excedance_stats(s)
            exc_b[b.exc_B] += 1
            des_b[b.des_B] += 1
        assert exc == exc_b == des_b


def test_b_stats_need_two_colors():
    with pytest.raises(ValueError):
        b_excedance_stats(ColoredPermutation((1,), (0,), 3))


def test_empty_polynomials():
    assert D_poly(0, 3) == Poly.const(1) and d_poly(0, 3) == 1
