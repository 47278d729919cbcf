from fractions import Fraction

import pytest

import f3sum


def test_evaluate_origin_and_geometric():
    assert f3sum.evaluate({}, (0, 0, 0))["value"] == 1.0
    out = f3sum.evaluate({"a": [1]}, (0.1, 0.1, 0.1))
    assert out["converged"]
    assert abs(out["value"] - 1 / 0.7) < 1e-12


def test_rational_backend_terminates():
    out = f3sum.evaluate({"a": ["-2"]}, ("1/2", "0", "0"), backend="rational")
    # (1 - 1/2)^2
    assert Fraction(out["value"]) == Fraction(1, 4)
    assert out["terminated_exactly"]


def test_check_identity_and_special_case():
    inst = {"params": {"a": [1.5], "e": [2.25]}, "i": 1, "scalars": {"t": 0.1},
            "args": [0.05, -0.02, 0.01]}
    report = f3sum.check("T1a", inst)
    assert report["pass"]
    assert report["residual"] < 1e-8
    fd3 = {"values": {"a": 1, "b1": 1, "b2": 1, "b3": 1, "c": 2}, "scalars": {"t": 0.2},
           "args": [0.05, 0.05, 0.05]}
    assert f3sum.check("FD3", fd3)["pass"]


def test_errors_raise():
    with pytest.raises(f3sum.F3Error):
        f3sum.evaluate({"zz": [1]}, (0, 0, 0))
    with pytest.raises(f3sum.F3Error):
        f3sum.check("T99", {"args": [0, 0, 0]})
    with pytest.raises(ValueError):
        f3sum.evaluate("{not json", (0, 0, 0))


def test_lemma_and_pochhammer():
    out = f3sum.lemma("saalschutz_3f2", 4, ["1/3", "2/5", "7/4"])
    assert out["series"] == out["closed_form"]
    assert f3sum.pochhammer("1/2", 3) == "15/8"


def test_suite_small_and_deterministic():
    summary, csv = f3sum.suite(seed=7, instances=2, lemma_instances=2)
    assert summary["all_pass"]
    assert len(summary["identity_groups"]) == 20
    assert csv.splitlines()[0] == "identity_id,instance_index,residual,converged_lhs,converged_rhs,pass"
    assert f3sum.suite(seed=7, instances=2, lemma_instances=2, threads=3)[1] == csv
    assert "T10c" in f3sum.identity_ids()
