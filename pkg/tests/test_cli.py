import json
import math

import pytest

from plurigreen.cli import main, parse_grid, to_csv

BALL = {
    "domain": {"type": "ball", "dimension": 2},
    "subspace": {"generators": [[[[1, 0], 1.0, 0.0]]]},
    "functional": "lelong",
    "closed_form": "ball_hyperplane",
    "minorant": "log_max_generators",
    "optimizer": {"restarts": 2, "iterations": 100, "polish": 1, "seed": 7},
    "grids": {"slice": "re1=0.1:0.3:2,re2=0.5"},
}


@pytest.fixture
def cfg(tmp_path):
    p = tmp_path / "ball.json"
    p.write_text(json.dumps(BALL))
    return str(p)


def test_eval_brackets_closed_form(cfg, capsys):
    assert main(["eval", "--config", cfg, "--point", "0.5,0,0.6,0"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["lower"] <= rec["closed_form"] <= rec["upper"] <= rec["closed_form"] + 2e-2
    assert rec["closed_form"] == pytest.approx(-0.4700036, abs=1e-6)


def test_eval_on_pole_set(cfg, capsys):
    assert main(["eval", "--config", cfg, "--point", "0,0,0.3,0"]) == 0
    rec = json.loads(capsys.readouterr().out)
    assert rec["upper"] == "-inf"


def test_malformed_config(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    assert main(["eval", "--config", str(bad), "--point", "0,0,0,0"]) == 2
    assert main(["eval", "--config", str(tmp_path / "missing.json"), "--point", "0"]) == 3


def test_unknown_suite():
    assert main(["verify", "--suite", "nope"]) == 2


def test_scan_formats(cfg, tmp_path):
    out = tmp_path / "s.csv"
    assert main(["scan", "--config", cfg, "--grid", "slice", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("index,point,closed_form") and len(lines) == 3
    svg = tmp_path / "s.svg"
    assert main(["scan", "--config", cfg, "--grid", "slice", "--format", "svg",
                 "--out", str(svg)]) == 0
    assert svg.read_text().startswith("<svg")
    js = tmp_path / "s.json"
    assert main(["scan", "--config", cfg, "--grid", "slice", "--format", "json",
                 "--out", str(js)]) == 0
    assert len(json.loads(js.read_text())["records"]) == 2


def test_empty_grid_gives_header_only(cfg, tmp_path):
    out = tmp_path / "e.csv"
    assert main(["scan", "--config", cfg, "--grid", "", "--out", str(out)]) == 0
    assert out.read_text().strip() == ",".join(
        ["index", "point", "closed_form", "lower", "upper", "width", "evaluations", "converged"])


def test_unwritable_output(cfg, tmp_path):
    assert main(["scan", "--config", cfg, "--grid", "slice",
                 "--out", str(tmp_path / "no" / "dir" / "x.csv")]) == 3


def test_grid_parsing():
    pts = parse_grid("re1=-0.5:0.5:3,im2=0.25", 2)
    assert len(pts) == 3 and all(p[1] == 0.25j for p in pts)


def test_csv_infinities():
    text = to_csv([{"point": [[0, 0]], "closed_form": "-inf", "lower": None, "upper": "-inf",
                    "width": None, "evaluations": 0, "converged": True}])
    assert "-inf" in text and math.isinf(float("-inf"))
