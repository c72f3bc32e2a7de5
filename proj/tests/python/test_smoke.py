import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import toriclg

DATA = Path(os.environ.get("TLG_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def load(name):
    return json.loads((DATA / name).read_text())


def ints(rows):
    return [[toriclg.number(x) for x in r] for r in rows]


def test_smith_normal_form():
    C = [[2, 4], [6, 8]]
    s = toriclg.smith_normal_form(C)
    U, D, V = s["U"], s["D"], s["V"]
    UC = [[sum(U[i][k] * C[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    UCV = [[sum(UC[i][k] * V[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert UCV == D
    assert s["invariant_factors"] == [2, 4]


def test_big_integers_survive():
    big = 3 ** 80
    s = toriclg.smith_normal_form([[big]])
    assert s["invariant_factors"] == [big]


def test_cokernel_of_div_e():
    div_e = [[1, 0, 1], [0, 1, 1], [-1, 0, 1], [0, -1, 1], [0, 0, 1]]
    P = toriclg.cokernel(div_e)
    assert P["free_rank"] == 2
    assert P["torsion"] == []
    proj = P["projection"]
    for row in proj:
        for j in range(3):
            assert sum(row[i] * div_e[i][j] for i in range(5)) == 0


def test_polyhedron_functions():
    square = [[1, 0], [0, 1], [-1, 0], [0, -1]]
    v = toriclg.vertices(square, [1, 1, 1, 1])
    assert sorted(map(tuple, v["points"])) == [(-1, -1), (-1, 1), (1, -1), (1, 1)]
    assert len(toriclg.lattice_points(square, [1, 1, 1, 1])) == 9
    assert toriclg.is_reflexive(square, [1, 1, 1, 1])
    stop = [[0, 1], [1, 1], [1, 0], [1, -1], [0, -1], [-1, -1], [-1, 0], [-1, 1]]
    alpha = [Fraction(2, 3), 1] * 4
    assert toriclg.facets(stop, alpha) == list(range(8))
    pts = toriclg.vertices(stop, alpha)["points"]
    assert [Fraction(2, 3), Fraction(1, 3)] in pts


def test_kopasetic_three_points():
    r = toriclg.kopasetic_check([[1], [-1], [-2]], [0, 2, 5])
    assert r["verdict"]
    assert r["facet_matrix"] == [[1], [-1]]


def test_dualize_and_analyze():
    model = load("elliptic.json")
    d = toriclg.dualize(model)
    assert ints(d["dual"]["A"]["matrix"])[-1] == [0, 0, 1]
    assert len(d["dual"]["A"]["matrix"]) == 9
    a = toriclg.analyze(model, alpha_prime=[1] * 8)
    assert a["is_bundle"] is True
    assert a["section_ok"] is True
    t = toriclg.analyze(load("threepoints.json"), alpha_prime=[0, 2, 5, 0])
    assert t["is_bundle"] is False
    assert t["section_ok"] is False


def test_constructions():
    assert toriclg.bb(load("p1p1_nef.json"))["mirror"]["passed"]
    bh = toriclg.bh(load("loop_cubic.json"))
    assert [toriclg.number(x) for x in bh["dual"]["mirror"]["weights"]] == [2, 1, 1]
    g = toriclg.givental(load("elliptic.json"))
    assert [r["text"] for r in g["givental"]["relations"]] == ["x1 x3 = Q1 y1^2", "x2 x4 = Q2 y1^2"]
    s = toriclg.poly(load("elliptic_rows.json"), bound=4)
    assert s["semigroup"]["generated"]


def test_plot_is_svg():
    svg = toriclg.plot(load("diamond.json"))
    assert svg.startswith("<svg")
    assert ">(0,-1)<" in svg


def test_errors_are_typed():
    with pytest.raises(toriclg.InputError):
        toriclg.check({"format_version": "1", "kind": "bh-data", "data": {}})
    with pytest.raises(toriclg.InputError):
        toriclg.lattice_points([[0, 1]], [1])
    code, out, err = toriclg.run_cli(["check", "-i", str(DATA / "nope.json")])
    assert code == 2
