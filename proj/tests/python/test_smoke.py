import json
import os

import pytest

import f2geom

DATA = os.path.join(os.path.dirname(__file__), os.pardir, "data")


def test_models():
    names = [m["name"] for m in f2geom.models()]
    assert "triangle" in names and "f2z3" in names
    line = next(m for m in f2geom.models() if m["name"] == "line")
    assert line["geometries"] == ["max", "med", "min"]


def test_classify_triangle():
    r = f2geom.classify("triangle", omega="cayley", constraints="qlc")
    assert r["count"] == 4
    assert all(c["torsion_free"] and c["metric_compatible"] for c in r["connections"])
    assert sum(c["flat"] for c in r["connections"]) == 3


def test_classify_line_file_has_no_metric_compatible_connection():
    r = f2geom.classify(os.path.join(DATA, "line.json"), omega="max", constraints=["metric-compatible"])
    assert r["count"] == 0
    json.dumps(r)


def test_invariant_strategy_on_the_heptagon():
    r = f2geom.classify("ngon-7", omega="cayley", strategy="invariant")
    assert r["count"] == 1
    assert r["connections"][0]["flat"]


def test_curvature_of_the_curved_triangle_qlc():
    r = f2geom.curvature("triangle", omega="cayley")
    curved = [c for c in r["connections"] if not c["flat"]]
    assert len(curved) == 1
    assert sum(l["conserved"] for l in curved[0]["lifts"]) >= 2
    one = f2geom.curvature("triangle", omega="cayley", connection=curved[0]["index"], lift=0)
    assert len(one["connections"]) == 1 and len(one["connections"][0]["lifts"]) == 1


def test_errors():
    with pytest.raises(f2geom.SearchSpaceTooLarge):
        f2geom.classify("triangle", omega="cayley", strategy="brute", enum_cap=1024)
    with pytest.raises(f2geom.InvalidInput):
        f2geom.classify("heptagon")
    with pytest.raises(f2geom.InvalidInput):
        f2geom.classify(os.path.join(DATA, "directed.json"), constraints="metric-compatible")
    with pytest.raises(ValueError):
        f2geom.classify("line", constraints="shiny")


def test_verify_and_demorgan():
    (two,) = f2geom.verify("2pt")
    assert all(c["pass"] for c in two["claims"])
    dm = f2geom.demorgan(os.path.join(DATA, "three_points.json"))
    assert all(c["pass"] for c in dm["claims"])


def test_solve_linear():
    particular, kernel = f2geom.solve_linear([[1, 1, 0], [0, 1, 1]], [1, 0])
    assert len(kernel) == 1
    assert [sum(a * x for a, x in zip(row, particular)) % 2 for row in [[1, 1, 0], [0, 1, 1]]] == [1, 0]
    assert f2geom.solve_linear([[1, 1], [1, 1]], [1, 0]) is None
