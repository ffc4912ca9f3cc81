"""Smoke tests for the python bindings.

Runs against an installed wheel or, via conftest.py, straight from the
cmake build tree (the build copies _core next to the package).
"""

import math

import galilei


def test_ten_labels():
    labels = galilei.labels()
    assert len(labels) == 10
    assert "D(1,2,1)" in labels
    assert "D(3,1,1)" in labels


def test_structure_checks_pass():
    report = galilei.reps_check("all")
    assert report["pass"] is True
    assert len(report["checks"]) == 10
    assert all(c["pass"] for c in report["checks"])


def test_contraction_identifies():
    report = galilei.contract("v1", "four-vector")
    assert report["pass"] is True
    assert report["label"] == "D(1,1,0)"
    report = galilei.contract("v3", "four-vector+scalar")
    assert report["label"] == "D(1,2,1)"


def test_covariance_of_the_coupled_system():
    report = galilei.covariance("extended")
    sys_report = report["systems"][0]
    assert sys_report["covariant"] is True
    assert sys_report["rotation_covariant"] is True
    assert any(e["row"] == "J0" for e in sys_report["M_poly"])


def test_reduction_edge_and_rejection():
    ok = galilei.reduce("extended", zero=["R", "j4"])
    assert ok["pass"] is True
    bad = galilei.reduce("magnetic", zero=["E_m"])
    assert bad["pass"] is False
    assert bad["error"] == "NotInvariant"


def test_potentials_and_limits():
    pots = galilei.potentials("extended_pot")
    assert pots["pass"] is True
    table = galilei.limits("v3", "extended", [])
    assert table["pass"] is True
    assert math.isclose(float(table["slope"]), table["symbolic_max_order"], abs_tol=0.1)


def test_catalog_export_grammar():
    text = galilei.catalog_export("magnetic")
    assert text.startswith("system magnetic")
    assert "faraday.x" in text
