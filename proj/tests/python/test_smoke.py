import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import exactdual as ed

FIXTURES = Path(os.environ.get("EXACTDUAL_FIXTURE_DIR", Path(__file__).parents[1] / "fixtures"))

WORKED = ([[-2, -1], [-1, -2]], [-4, -5], [6, 6])
LUNCH = ([[-27, -90], [-1300, -1150]], [-30, -700], ["23/25", "7/4"])


def test_worked_pair_duality():
    primal = ed.lp_solve(*WORKED)
    assert primal["optimum"] == 18
    assert primal["point"] == [1, 2]
    dual = ed.lp_solve(*ed.lp_dualize(*WORKED))
    assert dual["optimum"] == -18
    assert ed.opposites(primal["optimum"], dual["optimum"])


def test_cheap_lunch():
    r = ed.lp_solve(*LUNCH)
    assert r["optimum"] == Fraction(4093, 5730)
    assert abs(float(r["optimum"]) - 0.714311) < 1e-5
    A, b, c = LUNCH
    ext = ed.elp_solve(A, b, [c[0], "top"])
    assert ext["optimum"] == Fraction(46, 45)


def test_unbounded_and_infeasible():
    assert ed.lp_solve([[-1]], [0], [-1])["optimum"] == "bot"
    r = ed.lp_solve([[1]], [-1], [0])
    assert r["optimum"] == "top"
    assert r["farkas_y"] is not None


def test_extended_validity_and_dual():
    assert ed.elp_violations([["bot"], ["top"]], [-1, 0], [0]) == ["hAj@0"]
    A, b, c = ed.elp_dualize([["bot"]], [1], [2])
    assert A == [["top"]]
    assert b == [Fraction(2)] and c == [Fraction(1)]


def test_opposites_table_samples():
    assert ed.opposites(5, -5)
    assert ed.opposites("top", "bot")
    assert not ed.opposites(None, None)
    assert not ed.opposites("top", "top")


def test_farkas_certificates():
    side, y = ed.farkas("eq", [[1, 1], [1, 1]], [1, 2])
    assert side == "dual"
    assert y[0] * 1 + y[1] * 2 < 0
    side, x = ed.farkas("ineq", [[1, -1], [-1, 0]], [2, "-1/2"])
    assert side == "primal" and all(v >= 0 for v in x)
    assert ed.farkas("lin", [], [], cols=2) == ("primal", [0, 0])
    with pytest.raises(ValueError):
        ed.farkas("other", [[1]], [1])


def test_vcsp_abs_instance():
    inst = json.loads((FIXTURES / "abs_instance.json").read_text())
    assert ed.vcsp_eval(inst, [0, 1]) == Fraction(7, 5)
    assert ed.brute_force_optimum(inst) == (1, [1, 1])
    assert ed.blp_minimum(inst) == 1


def test_vcsp_triangle_gap():
    text = (FIXTURES / "max_cut_triangle.json").read_text()
    assert ed.brute_force_optimum(text)[0] == 1
    assert ed.blp_minimum(text) == 0


def test_errors_are_value_errors():
    with pytest.raises(ValueError):
        ed.lp_solve([[1, 2]], [1], [1])
    with pytest.raises(ed.ParseError):
        ed.vcsp_eval("{", [0])


def test_cli_in_process():
    code, out, err = ed.run_cli("lp", "report", str(FIXTURES / "worked_pair.json"))
    assert code == 0, err
    assert "primal: 18" in out.splitlines()
    assert "opposites: true" in out.splitlines()
    code, _, err = ed.run_cli("elp", "validate", str(FIXTURES / "invalid_column_bot_top.json"))
    assert code == 3 and "hAj" in err
