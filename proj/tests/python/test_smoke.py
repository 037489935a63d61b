import json
import xml.etree.ElementTree as ET

import pytest

import affcov


def test_family_and_solvers():
    g = affcov.family("lva3_planar9")
    assert (g.n, g.m) == (9, 21)
    assert affcov.lva(g) == 3
    assert affcov.chromatic_number(affcov.family("cycle:5")) == 3
    assert affcov.vertex_thickness(affcov.family("complete:9")) == 3
    assert affcov.Graph.from_graph6(g.graph6()) == g


def test_draw_verify_round_trip():
    cert = affcov.draw(affcov.family("complete:6"), "rho23_kn")
    res = affcov.verify(cert)
    assert res["ok"] and res["witness_size"] == 4 and res["kind"] == "planes_for_edges"
    doc = json.loads(cert)
    doc["drawing"]["points"][5] = doc["drawing"]["points"][0]
    bad = affcov.verify(json.dumps(doc))
    assert not bad["ok"] and bad["problem"]


def test_inapplicable_target():
    with pytest.raises(ValueError):
        affcov.draw(affcov.family("complete:5"), "k2q")
    assert "prism3d" in affcov.targets()


def test_export_is_wellformed_svg():
    cert = affcov.draw(affcov.family("complete_binary_tree:4"), "binary_tree")
    root = ET.fromstring(affcov.export(cert, "svg2d"))
    assert root.tag.endswith("svg")
    with pytest.raises(ValueError):
        affcov.export(cert, "svg_iso3d")


def test_bound_report():
    rep = affcov.bound_report(affcov.family("complete:6"))
    assert rep["pi12"] is None
    assert rep["rho23"] == {"lower": 4, "verified_lower": 3, "upper": 4}
