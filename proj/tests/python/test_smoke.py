"""Smoke tests for the python module."""

from fractions import Fraction

import pytest

bfx = pytest.importorskip("bfx")


def frac(s):
    return Fraction(s)


def test_majority_stability():
    maj3 = bfx.BooleanFunction.majority(3)
    assert bfx.stab_coeffs(maj3) == ["0/1", "3/4", "0/1", "1/4"]
    assert maj3.to_hex() == "e8"
    assert bfx.BooleanFunction.from_hex(3, "e8") == maj3


def test_dictator_phi_is_p():
    d = bfx.BooleanFunction.dictator(4, 2)
    assert bfx.phi_coeffs(d) == ["0/1", "1/1"]
    assert frac(bfx.phi_at(d, "2/5")) == Fraction(2, 5)


def test_gap_formula():
    assert frac(bfx.gap_formula_rhs(5, "2/5")) == Fraction(6, 625)
    report = bfx.verify_gap_formula(5, "2/5")
    assert report["pass"]
    assert frac(report["lhs"]) == Fraction(6, 625)


def test_gopi_structure():
    g5 = bfx.BooleanFunction.gopi(5)
    preds = g5.predicates()
    assert preds["unbiased"] and preds["odd"] and preds["monotone"] and preds["unate"]
    assert frac(g5.mu()) == Fraction(2, 32)
    assert sorted(g5.disagreements()) == [7, 24]
    w = bfx.is_ltf(g5)
    assert w is not None
    assert bfx.ltf_function(w["weights"], w["theta"]) == g5
    assert bfx.ltf_function([1, 1, 1, 3, 3]) == g5


def test_thresholds():
    t = bfx.thresholds(5)
    assert frac(t["eps"]) == Fraction(2, 5)
    assert frac(t["eps_lemma"]) == Fraction(1, 3)
    assert frac(t["gamma"]) == Fraction(1, 12)
    assert frac(t["gamma_prime"]) == Fraction(1, 14)


def test_sturm():
    # t(1-t) on (0,1)
    assert bfx.sturm_sign(["0/1", "1/1", "-1/1"], "0", "1") == "strictly_positive"
    assert bfx.sturm_sign(["-1/2", "1/1"], "0", "1") == "has_zero"


def test_run_claim():
    reports = bfx.run_claim("thm4", n_list=[3], grid=5)
    assert len(reports) == 5
    assert all(r["pass"] for r in reports)


def test_catalog():
    cat = bfx.catalog("unbiased_ltf", 3)
    assert sum(e["orbit_size"] for e in cat) == 14
    assert all("weights" in e for e in cat)


def test_binomials():
    assert frac(bfx.binom_equal_prob(2, "1/4")) == Fraction(59, 128)
