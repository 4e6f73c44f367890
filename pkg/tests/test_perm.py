from __future__ import annotations

from collections import Counter

import pytest

from gammacf import perm as P
from gammacf import reference as ref
from gammacf.verify import gamma_q, inv_DE


def words(names):
    return sorted(tuple(int(c) for c in w) for w in names)


def test_parse_and_validate():
    s = P.Permutation.parse("3 1 2")
    assert s == (3, 1, 2) and str(s) == "3 1 2"
    assert s.inverse() == (2, 3, 1)
    with pytest.raises(ValueError):
        P.Permutation.parse("1 1 2")


def test_basic_statistics():
    w = (3, 1, 4, 2)
    assert P.des(w) == 2
    assert P.maj(w) == 1 + 3
    assert P.inv(w) == 3
    assert P.exc(w) == 2 and P.drop(w) == 2 and P.fix(w) == 0


def test_crossing_example():
    s = P.Permutation.parse("9 3 7 4 6 10 5 8 1 2")
    assert P.crossing_stats(s) == (5, 10)
    assert P.inv(s) == P.drop(s) + 5 + 2 * 10


def test_fmax_example():
    assert P.fmax((4, 2, 1, 5, 7, 3, 6, 8)) == 2


def test_named_classes_match_rosters():
    assert sorted(P.class_DD(4, 1)) == words(ref.DD_4_1)
    assert sorted(P.class_DE(4, 1)) == words(ref.DE_4_1)
    assert sorted(P.class_DE(4, 2)) == words(ref.DE_4_2)
    assert sorted(P.class_coderangements(4)) == words(ref.CODERANGEMENTS_4)


def test_DE_members_are_cyclic_valley_heavy():
    for w in P.class_DE(4, 2):
        cy = P.cyclic_stats(w)
        assert cy.cda == 0 and cy.cvalley == 2


def test_coderangements_equinumerous_with_derangements():
    for n in range(1, 7):
        assert sum(1 for _ in P.class_coderangements(n)) == sum(1 for _ in P.class_derangements(n))


def test_boundary_conventions_differ():
    w = (2, 1, 3)
    zz = P.boundary_stats(w, P.BoundaryConvention.PAD_ZERO_ZERO)
    znp = P.boundary_stats(w, P.BoundaryConvention.PAD_ZERO_NP1)
    assert zz != znp


def test_gamma_q_table_entry():
    assert gamma_q(4, 1) == ref.GAMMA_Q[(4, 1)]
    assert inv_DE(4, 2) == ref.INV_DE[(4, 2)]


def test_vincular_equidistribution_small():
    for n in range(1, 6):
        a, b = Counter(), Counter()
        for w in P.all_permutations(n):
            v = P.vincular_counts(w)
            cs = P.crossing_stats(w)
            a[(v.p132, v.p231, P.des(w))] += 1
            b[(cs.nest, cs.cros, P.drop(w))] += 1
        assert a == b


def test_large_classes_are_lazy():
    it = P.class_DD(P.MATERIALIZE_MAX + 1, 0)
    assert not isinstance(it, list)
    assert next(iter(it))
