from __future__ import annotations

import json
from fractions import Fraction

import pytest

from flatfronts import catalog
from flatfronts.algebra import GaussianRational
from flatfronts.catalog import CATALOG, CatalogError
from flatfronts.expr import parse_constant, parse_rational


def run(name, **overrides):
    return json.loads(catalog.run_catalog(name, overrides).to_json())


def residues(report):
    return {p["location"]: p["residue"] for p in report["period"]["poles"]}


def test_fixtures_carry_provenance():
    for entry in CATALOG.values():
        for exp in entry.fixture.values():
            assert exp.tag in ("reported", "computed")


@pytest.mark.parametrize("a", ["2", "-3", "1/2", "5/7"])
def test_k1_residues_follow_the_parameter(a):
    rep = run("k1-four-ends", a=a)
    fix = CATALOG["k1-four-ends"].fixture["residues"].value
    res = residues(rep)
    for loc, formula in fix.items():
        expected = parse_rational(formula, {"a": a})
        assert parse_constant(res[loc]) == expected.num.leading / expected.den.leading


def test_k1_report():
    rep = run("k1-four-ends")
    fix = CATALOG["k1-four-ends"].fixture
    assert rep["period"]["verdict"]
    ords = {o["end"]: o["ord"] for o in rep["canonical"]["ordQ"]}
    assert ords == fix["ordQ"].value
    d = rep["degrees"]
    assert (d["d"], d["dstar"], d["k"]) == fix["degrees"].value
    assert rep["osserman"]["embedded"] is fix["embedded"].value
    assert Fraction(rep["valuedist"]["G"]["nu"]) == fix["nu_G"].value
    assert Fraction(rep["valuedist"]["Gstar"]["nu"]) == fix["nu_Gstar"].value
    assert rep["valuedist"]["Gstar"]["exceptional"] == fix["exceptional_Gstar"].value


def test_k2_report():
    rep = run("k2-five-ends")
    fix = CATALOG["k2-five-ends"].fixture
    res = residues(rep)
    for loc, value in fix["residues"].value.items():
        assert res[loc] == value
    d = rep["degrees"]
    assert (d["d"], d["dstar"], d["k"]) == fix["degrees"].value
    q = parse_rational(rep["canonical"]["Q"])
    numerator = q.num.scale(GaussianRational(1) / q.num.leading)
    assert numerator == parse_rational(fix["hopf_numerator"].value).num
    assert Fraction(rep["valuedist"]["G"]["nu"]) == fix["nu_G"].value
    assert Fraction(rep["valuedist"]["Gstar"]["nu"]) == fix["nu_Gstar"].value
    assert [r["nu_i"] for r in rep["valuedist"]["Gstar"]["ramified"]] == fix["ramified_Gstar"].value


def test_kuy_report():
    rep = run("kuy-z-z2")
    fix = CATALOG["kuy-z-z2"].fixture
    assert rep["ends"] == fix["ends"].value
    assert len(rep["valuedist"]["G"]["exceptional"]) == fix["D_G"].value
    assert len(rep["valuedist"]["Gstar"]["exceptional"]) == fix["D_Gstar"].value
    assert all(e["regular"] for e in rep["end_classification"])
    assert rep["osserman"]["embedded"] is fix["embedded"].value


def test_revolution_horosphere_and_generic():
    rep = run("revolution", alpha="0")
    assert rep["horosphere"] is True
    assert rep["ends"] == ["0"]
    rep = run("revolution", alpha="2")
    assert rep["valuedist"]["G"]["exceptional"] == ["0", "inf"]
    assert rep["valuedist"]["Gstar"]["exceptional"] == ["0", "inf"]


def test_k3_report():
    rep = json.loads(catalog.run_catalog("k3-torus").to_json())
    fix = CATALOG["k3-torus"].fixture
    d = rep["degrees"]
    assert (d["d"], d["dstar"], d["k"]) == fix["degrees"].value
    assert rep["osserman"]["embedded"] is fix["embedded"].value
    assert rep["coincidences_outside_ends"] == fix["coincidences_outside_ends"].value
    assert rep["backend"] == "numeric-path"


@pytest.mark.parametrize(
    "name,overrides",
    [("k1-four-ends", {"a": "1"}), ("k1-four-ends", {"a": "0"}), ("k1-four-ends", {"a": "i"}),
     ("revolution", {"alpha": "1"}), ("kuy-z-z2", {"b": "2"}), ("nope", {})],
)
def test_bad_overrides(name, overrides):
    with pytest.raises(CatalogError):
        catalog.build(name, overrides)
