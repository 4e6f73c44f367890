from __future__ import annotations

import json

import pytest

from gammacf import reference as ref
from gammacf.verify import (Budget, BudgetExceeded, emit_table, gamma2_row,
                            get_seed, hatgamma2_row, perm_table, run_identity,
                            verify_cf, verify_egf, verify_thm6, verify_thm8,
                            verify_weightsum)


def test_budget_enforced():
    with pytest.raises(BudgetExceeded):
        perm_table(10)
    with pytest.raises(BudgetExceeded):
        run_identity("thm3", 7, 3)
    small = Budget(max_perm=100, max_colored=100)
    with pytest.raises(BudgetExceeded):
        run_identity("thm1", 6, budget=small)


def test_seed_from_environment(monkeypatch):
    monkeypatch.delenv("GAMMACF_SEED", raising=False)
    assert get_seed() == 0
    monkeypatch.setenv("GAMMACF_SEED", "17")
    assert get_seed() == 17
    assert run_identity("cf-b-full", 4).ok


def test_reports_are_deterministic():
    a = run_identity("lemmaB", 5).to_json()
    b = run_identity("lemmaB", 5).to_json()
    a.pop("elapsed"), b.pop("elapsed")
    assert a == b


def test_thm6_instance():
    rep = verify_thm6(4, 2)
    assert rep.ok


def test_thm8_row():
    rep = verify_thm8(4)
    assert rep.ok and rep.details["hat_gamma"] == [0, 1, 15, 54, 57]


def test_rows_match_published():
    for n in range(7):
        assert gamma2_row(n) == ref.GAMMA2[n]
        assert hatgamma2_row(n) == ref.HATGAMMA2[n]


def test_emit_table_csv_and_json():
    csv_text = emit_table("gamma2", 6)
    assert csv_text.splitlines()[-1] == "6,0,1,53,184,95,15,1"
    assert "\r" not in csv_text
    doc = json.loads(emit_table("D_poly", 4, 2, "json"))
    assert doc["rows"][4]["values"] == [0, 1, 15, 57, 87, 57, 15, 1]
    gq = json.loads(emit_table("gamma_q", 3, fmt="json"))
    assert gq["rows"][2]["values"][1] == {"var": "q", "coeffs": [0, 1, 1]}
    assert emit_table("hatgamma2", 5) == emit_table("hatgamma2", 5)
    with pytest.raises(ValueError):
        emit_table("nope", 3)


def test_unknown_names():
    with pytest.raises(KeyError):
        run_identity("nope", 3)
    with pytest.raises(ValueError):
        verify_cf("nope", 3)
    with pytest.raises(ValueError):
        verify_egf("nope")


def test_printed_weight_rule_is_rejected():
    rep = verify_weightsum(3, 2)
    assert rep.ok
    assert rep.details["printed_reading_matches"] is False


def test_failure_carries_witness():
    from gammacf.verify import _Check
    chk = _Check("demo", n=1)
    chk.expect(True, "unused")
    chk.expect(False, {"x": 1})
    chk.expect(False, {"x": 2})
    rep = chk.report()
    assert rep.status == "fail" and rep.witness == {"x": 1}
    assert "FAIL" in rep.line()
