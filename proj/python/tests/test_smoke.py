import json

import pytest

import cfauto


def test_derive_period_doubling():
    eq = cfauto.derive([], ["a", "b"])
    assert eq["A"] == "a*b+b^2+1"
    assert eq["B"] == ["a^2*b+a*b^2", "a*b"]
    assert eq["delta"] == "a+b"
    assert json.loads(eq["json"])["letters"] == ["a", "b"]


def test_verify_clean():
    report = cfauto.verify([], ["a", "b"], {"a": "t", "b": "t+1"}, precision=256)
    assert report == {"clean": True, "valuation": None, "precision": 256}


def test_specialize():
    eq = cfauto.specialize(["a"], ["b", "c"], {"a": "t", "b": "t^2", "c": "t^2+1"})
    assert eq["A"] == "(t^5+t^4+t^3+1)/(t^2)"


def test_sequence_and_automaton():
    assert "".join(cfauto.sequence([], ["a", "b"], 8)) == "abaaabab"
    dfa = cfauto.automaton(["a"], ["b", "c"])
    assert dfa["next"] == [1, 2, 1]
    assert dfa["emit"] == ["a", "b", "c"]


def test_search_period_doubling():
    cert = cfauto.search([], ["a", "b"], [0, 1], q=2, deg_x=2, deg_t=3)
    assert cert["deg_x"] == 2
    assert cert["coeffs"] == ["t^2", "t^3+t", "t^2+1"]
    assert cfauto.search([], ["a", "b"], [0, 1], deg_x=1, deg_t=1) is None


def test_examples_match():
    assert all(not mismatches for _, mismatches in cfauto.check_examples())


def test_errors_carry_codes():
    with pytest.raises(cfauto.CfautoError) as info:
        cfauto.derive([], ["a", "a"])
    assert info.value.code == "DegenerateDeterminant"
    with pytest.raises(ValueError):
        cfauto.verify([], ["a", "b"], {"a": "t^-1", "b": "t"})
