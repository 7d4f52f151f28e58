"""Smoke tests for the filtval extension module."""

import json

import pytest

import filtval


def body(report_text):
    doc = json.loads(report_text)
    doc.pop("metadata", None)
    return doc


def test_catalog():
    assert filtval.catalog() == ["i1", "i2", "i3", "i4", "i5", "i6", "i7"]


def test_nu_values():
    assert filtval.nu("i1", "3") == "1"
    assert filtval.nu("i1", "4") == "0"
    assert filtval.nu("i1", "0") == "inf(exact)"
    assert filtval.nu("i4", "18") == "2"
    assert filtval.nu("i3", "x^2+2x^3") == "2"
    assert filtval.nu("i7", "(3,6)") == "1"


def test_check_all_pass_on_field():
    doc = body(filtval.check("i5"))
    assert doc["instance_id"] == "field_trivial_tail(7)"
    interesting = {r["claim_id"]: r["verdict"] for r in doc["results"]}
    for claim in ("def2.5.i", "def2.5.ii", "def2.5.iii", "def2.5.iv", "def2.5.onto"):
        assert interesting[claim] == "PASS"


def test_check_finds_counterexamples():
    doc = body(filtval.check("i1", checks="def2.5.iv,prop3.4"))
    results = {r["claim_id"]: r for r in doc["results"]}
    assert results["def2.5.iv"]["verdict"] == "FAIL"
    assert results["def2.5.iv"]["witness"]["a"] == "3"
    assert results["prop3.4"]["verdict"] == "FAIL"


def test_reports_are_deterministic():
    a = body(filtval.check("i1"))
    b = body(filtval.check("i1"))
    assert a == b
    s1 = body(filtval.check("i4", seed=7, level_bound=8))
    s2 = body(filtval.check("i4", seed=7, level_bound=8))
    assert s1 == s2


def test_skeleton():
    doc = body(filtval.skeleton("i1"))
    assert doc["representatives"] == ["1", "3"]
    assert doc["relation"] == "adopted-convention"
    assert doc["class_map"]["6"] == "3"


def test_orbit():
    doc = json.loads(filtval.orbit("i4", "1"))
    assert doc["ray_from"] == 0
    assert doc["contains_infinity"] is True
    assert doc["exact"] is True


def test_valuate_inline_spec():
    doc = body(filtval.valuate('{"kind": "zmod_padic", "p": 3, "k": 2}', ["3", "0"]))
    assert doc["values"][0]["nu"] == "1"
    assert doc["values"][1]["nu"] == "inf(exact)"


def test_errors_surface():
    with pytest.raises(RuntimeError):
        filtval.check("i99")
    with pytest.raises(RuntimeError):
        filtval.check("i4", strategy="exhaustive")
