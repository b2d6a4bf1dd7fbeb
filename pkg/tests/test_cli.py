import json
import math

import pytest

from flatbill.cli import run
from flatbill.surface import load


@pytest.fixture
def x5_file(tmp_path):
    path = tmp_path / "x5.json"
    assert run(["build", "--family", "xn", "--n", "5", "--out", str(path)]) == 0
    return path


def test_build_and_validate(x5_file, capsys):
    assert run(["validate", str(x5_file)]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["ok"] and out["genus"] == 2 and out["stratum"] == [2]


def test_round_trip_precision(x5_file):
    s = load(x5_file)
    assert s.polygons[0].vertices[0].x == math.cos(-math.pi / 5)


def test_invalid_file(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"name": "b", "polygons": [{"vertices": [[0, 0], [1, 0], [1, 1], [0, 1]]}],
                               "gluings": [[[0, 0], [0, 2]]]}))
    assert run(["validate", str(bad)]) == 1
    assert "uncovered edge" in capsys.readouterr().out
    assert run(["saddles", str(bad), "--length", "2"]) == 1
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "InvalidSurfaceError"


def test_usage_errors(capsys):
    assert run(["bogus"]) == 2
    assert json.loads(capsys.readouterr().err)["error"] == "usage"
    assert run(["build", "--family", "xn"]) == 2
    assert run(["decompose", "x.json", "--dir", "1", "--budget", "3"]) == 2


def test_verify_identity(capsys):
    assert run(["verify", "--check", "identity", "--n", "7"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["lhs"] == pytest.approx(8) and out["rhs"] == 8


@pytest.mark.parametrize("check", ["veech", "decomp", "trapezoid"])
def test_verify_checks(check, capsys):
    assert run(["verify", "--check", check, "--n", "5"]) == 0
    assert json.loads(capsys.readouterr().out)["ok"]


def test_count_with_prediction(x5_file, tmp_path):
    out = tmp_path / "count.csv"
    assert run(["count", str(x5_file), "--lengths", "10,20,40", "--what", "cyl", "--predict", "xn:5",
                "--unsigned", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "T,count,count_over_T2,predicted,ratio"
    ratios = [float(line.split(",")[-1]) for line in lines[1:]]
    assert abs(ratios[-1] - 1) < 0.1


def test_saddles_and_cylinders(x5_file, tmp_path, capsys):
    assert run(["saddles", str(x5_file), "--length", "3"]) == 0
    first = capsys.readouterr().out
    assert first.startswith("hol_x,hol_y,length,start_cone,end_cone")
    assert run(["saddles", str(x5_file), "--length", "3"]) == 0
    assert capsys.readouterr().out == first
    assert run(["cylinders", str(x5_file), "--length", "5", "--jobs", "1"]) == 0
    a = capsys.readouterr().out
    assert run(["cylinders", str(x5_file), "--length", "5", "--jobs", "2"]) == 0
    assert capsys.readouterr().out == a


def test_decompose(x5_file, capsys):
    assert run(["decompose", str(x5_file), "--dir", "0,1", "--budget", "50"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert len(out["cylinders"]) == 2
    assert out["total_area"] == pytest.approx(5 * math.sin(2 * math.pi / 5))


def test_orbit_count(capsys):
    assert run(["orbit-count", "--group", "sl2z", "--vector", "1,0", "--radius", "10"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["count"] == 192
    assert set(out) >= {"vector", "T", "K", "count", "predicted", "ratio"}


def test_build_families(tmp_path, capsys):
    for fam in ("pn", "qn", "sn"):
        assert run(["build", "--family", fam, "--n", "5", "--out", str(tmp_path / f"{fam}.json")]) == 0
        assert run(["validate", str(tmp_path / f"{fam}.json")]) == 0
    assert run(["build", "--family", "square"]) == 0
    capsys.readouterr()
    assert run(["build", "--family", "pn", "--n", "5", "--table", "--out", str(tmp_path / "p5.json")]) == 0
    assert run(["build", "--family", "unfold", "--polygon", str(tmp_path / "p5.json"),
                "--out", str(tmp_path / "u.json")]) == 0
    assert len(load(tmp_path / "u.json").polygons) == 20
