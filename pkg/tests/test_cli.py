from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from hexcsl.cli import CSV_COLUMNS, UNIT_LEGEND, build_parser, main
from hexcsl.coincidence import dirichlet_coefficients


def run(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    assert code == 0
    return json.loads(out)


def test_help_has_unit_legend():
    text = build_parser().format_help()
    assert "(-xi^2)^k" in text and "1=1+ξ" in text
    assert UNIT_LEGEND in build_parser().format_help()


def test_enumerate_small(capsys):
    _, out = run(capsys, "enumerate", "--max-index", "7")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert tuple(rows[0].keys()) == CSV_COLUMNS
    csls = [r for r in rows if r["row"] == "csl"]
    assert [(r["index"], r["z_m"], r["z_n"]) for r in csls] == [("1", "1", "0"), ("7", "3", "1"), ("7", "3", "2")]
    summary = {r["index"]: (r["f"], r["rotations"]) for r in rows if r["row"] == "summary"}
    assert summary == {"1": ("1", "6"), "7": ("2", "12")}
    _, out = run(capsys, "enumerate", "--max-index", "1")
    assert [r["row"] for r in csv.DictReader(io.StringIO(out))] == ["csl", "summary"]


def test_enumerate_counts_match_series(capsys):
    d = run_json(capsys, "enumerate", "--max-index", "100", "--format", "json")
    per = [0] * 100
    for r in d["csls"]:
        per[r["index"] - 1] += 1
    assert per == dirichlet_coefficients(100)
    assert all(s["rotations"] == 6 * s["f"] for s in d["summary"])


def test_csv_json_agree(capsys):
    d = run_json(capsys, "enumerate", "--max-index", "60", "--format", "json")
    _, out = run(capsys, "enumerate", "--max-index", "60")
    rows = [r for r in csv.DictReader(io.StringIO(out)) if r["row"] == "csl"]
    assert [(int(r["index"]), int(r["z_m"]), int(r["z_n"]), r["angle_deg"]) for r in rows] == [
        (c["index"], c["z"]["m"], c["z"]["n"], c["angle_deg"]) for c in d["csls"]
    ]


def test_shift_examples(capsys):
    d = run_json(capsys, "shift", "--shift", "2/3,1/3")["description"]
    assert d["units"] == [0, 2, 4]
    assert d["reflection"] == {"z": {"m": 1, "n": 0}, "eps": 1, "reflect": True}
    assert d["certified_group"] is True
    d = run_json(capsys, "shift", "--shift-class", "both-independent")["description"]
    assert d["kind"] == "trivial" and d["reflection"] is None
    d = run_json(capsys, "shift", "--shift", "0/1,0/1")["description"]
    assert d["kind"] == "full-oc" and d["units"] == [0, 1, 2, 3, 4, 5]
    d = run_json(capsys, "shift", "--shift-class", "affine", "--p1", "2", "--q1", "1", "--p2", "5", "--q2", "1")
    assert len(d["description"]["elements"]) == 2
    d = run_json(capsys, "shift", "--shift-class", "irrational-a", "--b", "1/2")
    assert d["description"]["kind"] == "trivial"


def test_shift_argument_errors(capsys):
    with pytest.raises(SystemExit):
        main(["shift"])
    with pytest.raises(SystemExit):
        main(["shift", "--shift-class", "irrational-b"])
    with pytest.raises(SystemExit):
        main(["shift", "--shift", "1/2"])


def test_packing_examples(capsys):
    assert run_json(capsys, "packing", "--z", "3,1", "--eps", "0")["index"] == 7
    assert run_json(capsys, "packing", "--z", "3,1", "--eps", "3")["index"] == 14
    assert run_json(capsys, "packing", "--z", "3,1", "--eps", "3", "--shifted")["index"] == 7
    d = run_json(capsys, "packing", "--z", "1,0", "--eps", "0")
    assert d["index"] == 1 and d["csml"]["index_num"] == 1


def test_csl_and_factor(capsys):
    d = run_json(capsys, "csl", "--z", "3,1", "--shift", "2/3,1/3")
    assert d["index"] == 7 and d["member"] is True and d["value"] == {"num": {"m": 8, "n": 5}, "den": 7}
    assert run_json(capsys, "csl", "--z", "3,1", "--eps", "3", "--shift", "2/3,1/3")["member"] is False
    d = run_json(capsys, "factor", "--z", "7,0")
    assert sorted((f["prime"]["m"], f["prime"]["n"]) for f in d["factors"]) == [(3, 1), (3, 2)]
    assert main(["csl", "--z", "2,1"]) == 2  # not a coincidence numerator


def test_count(capsys):
    rows = run_json(capsys, "count", "--max", "43")
    assert [(r["index"], r["f"]) for r in rows] == [(1, 1), (7, 2), (13, 2), (19, 2), (31, 2), (37, 2), (43, 2)]


def test_verify_subset(capsys):
    code, out = run(capsys, "verify", "--norm-bound", "20", "--radius", "6", "--only", "a1_dirichlet_series", "a3_csl_patches")
    d = json.loads(out)
    assert code == 0 and d["passed"] and [c["name"] for c in d["checks"]] == ["a1_dirichlet_series", "a3_csl_patches"]
    assert "seconds" not in d["checks"][0]


def test_render_to_file(tmp_path, capsys):
    out = tmp_path / "h.svg"
    assert main(["render", "--scene", "honeycomb", "--radius", "2", "--out", str(out)]) == 0
    assert out.read_text().startswith("<svg")


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate", "--max-index", "50"],
        ["enumerate", "--max-index", "50", "--format", "json"],
        ["shift", "--shift", "1/2,1/7"],
        ["packing", "--z", "5,2", "--eps", "1", "--reflect"],
        ["render", "--scene", "csl-overlay", "--z", "3,1", "--radius", "3"],
        ["verify", "--norm-bound", "10", "--radius", "4", "--only", "a5_honeycomb_indices"],
    ],
)
def test_deterministic_output(argv):
    cmd = [sys.executable, "-m", "hexcsl.cli", *argv]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a
