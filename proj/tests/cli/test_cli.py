import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get("GKRES_CLI", "gkres")
DATA = Path(__file__).resolve().parent.parent / "data"


def run(*args):
    return subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)


def q(*terms):
    return json.dumps([{"coeff": c, "exponent": list(e)} for c, e in terms])


def test_check_generic():
    r = run("check", DATA / "two_triangles.json")
    assert r.returncode == 0
    assert r.stdout.strip() == "GENERIC"


def test_check_two_squares():
    r = run("check", DATA / "two_squares.json")
    assert r.returncode == 1
    assert r.stdout.startswith("NOT_GENERIC witness (")


def test_malformed_exponent():
    r = run("check", DATA / "bad_exponent.json")
    assert r.returncode == 2
    assert "system[1][0].exponent" in r.stderr


def test_syntax_error_position(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"variables": ["x"],\n "system": [[}')
    r = run("count", bad)
    assert r.returncode == 2
    assert "line 2" in r.stderr


def test_missing_file():
    assert run("count", DATA / "missing.json").returncode == 2


def test_coefficients_table():
    r = run("coefficients", DATA / "two_triangles.json")
    assert r.returncode == 0
    rows = json.loads(r.stdout)
    got = {tuple(row["vertex"]): row["coefficient"] for row in rows}
    assert got == {(0, 1): 1, (1, 3): -1, (3, 4): 1, (4, 3): -1, (3, 1): 1, (1, 0): -1}
    assert [row["vertex"] for row in rows] == sorted(row["vertex"] for row in rows)


def test_reversed_order_negates():
    rows = json.loads(run("coefficients", DATA / "two_triangles_reversed.json").stdout)
    got = {tuple(row["vertex"]): row["coefficient"] for row in rows}
    assert got == {(0, 1): -1, (1, 3): 1, (3, 4): -1, (4, 3): 1, (3, 1): -1, (1, 0): 1}


def test_coefficients_segment():
    rows = json.loads(run("coefficients", DATA / "segment.json").stdout)
    assert [(row["vertex"], row["coefficient"]) for row in rows] == [([-1], 1), ([1], -1)]


def test_coefficients_not_generic():
    r = run("coefficients", DATA / "two_squares.json")
    assert r.returncode == 1
    assert "NOT_GENERIC" in r.stdout


def test_mixed_volume_verify():
    r = run("mixed-volume", "--verify", DATA / "two_triangles.json")
    assert r.returncode == 0
    assert r.stdout.splitlines() == ["V = 3", "n!V = 6", "oracle V = 3", "AGREE"]
    r = run("mixed-volume", "--verify", DATA / "axis_segments.json")
    assert r.stdout.splitlines() == ["V = 1/2", "n!V = 1", "oracle V = 1/2", "AGREE"]


def test_count():
    assert run("count", DATA / "two_triangles.json").stdout.strip() == "6"
    assert run("count", DATA / "axis_segments.json").stdout.strip() == "1"
    assert run("count", DATA / "segment.json").stdout.strip() == "2"


def test_sum():
    assert run("sum", DATA / "axis_segments.json").stdout.strip() == "1"
    r = run("sum", "--q", q(("1", (2, 1))), DATA / "axis_segments.json")
    assert r.stdout.strip() == "12"
    r = run("sum", "--q", q(("1", (1,))), DATA / "segment.json")
    assert r.stdout.strip() == "3"


def test_sum_trace():
    r = run("sum", "--trace", "--q", q(("1", (3, 0))), DATA / "two_triangles.json")
    lines = r.stdout.splitlines()
    assert "vertex (3,1) c = 1 res = 3/4" in lines
    assert "vertex (4,3) c = -1 res = -9/4" in lines
    assert lines[-1] == "3"


def test_jobs_do_not_change_output():
    args = ("sum", "--trace", "--q", q(("1", (6, 0)), ("-2/3", (1, 1))), DATA / "two_triangles.json")
    assert run(*args).stdout == run("--jobs", "4", *args).stdout


def test_residue():
    r = run("residue", "--vertex", "3,1", "--q", q(("1", (3, 0))), DATA / "two_triangles.json")
    assert r.stdout.strip() == "3/4"
    r = run("residue", "--vertex", "2,2", DATA / "two_triangles.json")
    assert r.returncode == 1


def test_eliminate():
    assert run("eliminate", "--var", "x", DATA / "two_triangles.json").stdout.strip() == "x^6 - x^3 + 1/4"
    assert run("eliminate", "--var", "y", DATA / "two_triangles.json").stdout.strip() == "y^6 - 2*y^3 + 2"
    assert run("eliminate", "--var", "t", DATA / "segment.json").stdout.strip() == "t^2 - 3*t + 2"


def test_eliminate_out(tmp_path):
    out = tmp_path / "elim.json"
    r = run("eliminate", "--var", "x", "--out", out, DATA / "two_triangles.json")
    assert r.returncode == 0
    data = json.loads(out.read_text())
    assert data["variable"] == "x"
    assert data["degree"] == 6
    assert data["coefficients"] == ["1", "0", "0", "-1", "0", "0", "1/4"]


def test_eliminate_unknown_variable():
    assert run("eliminate", "--var", "z", DATA / "two_triangles.json").returncode == 2


@pytest.mark.parametrize("command", ["count", "coefficients", "mixed-volume"])
def test_non_generic_exit_code(command):
    assert run(command, DATA / "two_squares.json").returncode == 1
