from __future__ import annotations

from math import factorial

import pytest

from gammacf import reference as ref
from gammacf.colored import ColoredPermutation, all_colored, cros_colored
from gammacf.laguerre import (InvalidHistory, LaguerreHistory, MotzkinPath,
                              WeightParams, construction_crossings,
                              count_histories, enumerate_histories,
                              history_weight, phi, phi_inverse, sigma_weight,
                              validate_history)


def test_figure_example():
    s = ColoredPermutation.parse(ref.EXAMPLE_COLORED, 3)
    h = phi(s)
    assert list(h.steps) == ref.EXAMPLE_HISTORY_STEPS
    assert list(h.labels) == ref.EXAMPLE_HISTORY_LABELS
    assert phi_inverse(h) == s
    assert construction_crossings(h) == cros_colored(s) == 6


def test_example_weight():
    s = ColoredPermutation.parse(ref.EXAMPLE_COLORED, 3)
    primes = dict(q=2, t=3, tt=5, w=7, wt=11, x=13, xt=17, y=19, yt=23)
    wp = WeightParams(**primes)
    want = 1
    for k, e in ref.EXAMPLE_WEIGHT.items():
        want *= primes[k] ** e
    assert sigma_weight(s, wp) == want == history_weight(phi(s), wp)


def test_long_history_is_valid():
    h = LaguerreHistory.build(ref.LONG_HISTORY_STEPS, ref.LONG_HISTORY_LABELS, 3)
    assert validate_history(h) == (True, None)
    s = phi_inverse(h)
    assert phi(s) == h


def test_invalid_histories_are_reported():
    bad = LaguerreHistory.build(["NE", "SE"], [(0, 0), (2, 1)], 2)
    ok, why = validate_history(bad)
    assert not ok and "step 2" in why
    with pytest.raises(InvalidHistory):
        phi_inverse(bad)
    open_path = LaguerreHistory.build(["NE"], [(0, 0)], 2)
    assert not validate_history(open_path)[0]


def test_json_round_trip():
    h = phi(ColoredPermutation.parse(ref.EXAMPLE_COLORED, 3))
    assert LaguerreHistory.from_json(h.to_json()) == h
    assert len(h.ascii().splitlines()) == h.n


def test_motzkin_heights():
    p = MotzkinPath(("NE", "E", "SE"))
    assert p.heights == (0, 1, 1, 0) and p.is_valid()
    assert not MotzkinPath(("SE", "NE")).is_valid()


@pytest.mark.parametrize("r", [1, 2, 3])
def test_history_count(r):
    for n in range(0, 5):
        assert count_histories(n, r) == factorial(n) * r ** n


def test_phi_is_onto_small():
    for r in (1, 2):
        for n in range(0, 4):
            images = {phi(s) for s in all_colored(n, r)}
            assert images == set(enumerate_histories(n, r))
