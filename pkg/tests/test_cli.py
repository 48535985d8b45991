import csv
import io
import json
import math

import pytest

from specgeom import cli, heat
from specgeom.lattices import load_form, load_lattice
from specgeom.polygeom import load_polygon


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows(text):
    return list(csv.reader(io.StringIO(text)))


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def grams(tmp_path):
    return {
        "2I": write(tmp_path, "a.json", {"n": 2, "gram": [[2, 0], [0, 2]]}),
        "d24": write(tmp_path, "b.json", {"n": 2, "gram": [[2, 0], [0, 4]]}),
        "id": write(tmp_path, "id.json", {"n": 2, "basis": [[1, 0], [0, 1]]}),
        "e8": "fixture:e8",
    }


def test_isospec_negative_verdict(capsys, grams):
    code, out, _ = run(capsys, "isospec", grams["2I"], grams["d24"])
    assert code == 3
    report = json.loads(out)["report"]
    assert report["first_discrepancy"] == "determinant"
    assert report["verdict"] != "isospectral"


def test_isospec_same_lattice(capsys, grams):
    code, out, _ = run(capsys, "isospec", grams["2I"], grams["2I"])
    assert code == 0 and json.loads(out)["report"]["verdict"] == "isospectral"


def test_isospec_dimension_mismatch(capsys, grams):
    code, _, err = run(capsys, "isospec", grams["2I"], grams["e8"])
    assert code == 1 and "dimension" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["corner", "--theta", "1.0"],
        ["corner", "--theta", "banana"],
        ["weyl", "--lambda", "-1"],
        ["weyl", "--sides", "0", "--lambda", "1"],
        ["torus-spectrum", "fixture:nope"],
        ["heat-trace", "--box", "1", "--t", "0"],
        ["polygeom", "--staircase", "2"],
        ["no-such-command"],
        ["weyl", "--lambda", "1", "--bogus"],
    ],
)
def test_input_errors_exit_one(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and err


def test_bad_lattice_field_exits_one(capsys, tmp_path):
    bad = write(tmp_path, "bad.json", {"n": 2, "basis": [[1, "x"], [0, 1]]})
    code, _, err = run(capsys, "torus-spectrum", bad)
    assert code == 1 and "basis[0][1]" in err


def test_internal_failure_exits_two(capsys, monkeypatch):
    def broken(*a, **k):
        raise heat.QuadratureError("budget exhausted")

    monkeypatch.setattr(heat, "carslaw_integral", broken)
    code, _, err = run(capsys, "corner", "--theta", "pi")
    assert code == 2 and "invariant" in err


def test_torus_spectrum_identity(capsys, grams):
    code, out, _ = run(capsys, "torus-spectrum", grams["id"], "--cutoff", "2")
    assert code == 0
    table = rows(out)
    assert table[0] == ["norm_sq_exact", "multiplicity", "eigenvalue"]
    assert [r[:2] for r in table[1:]] == [["0", "1"], ["1", "4"], ["2", "4"]]
    assert float(table[2][2]) == pytest.approx(4 * math.pi**2)
    code, out, _ = run(capsys, "torus-spectrum", grams["id"], "--cutoff", "0")
    assert rows(out)[1:] == [["0", "1", "0"]]


def test_deterministic_output(capsys):
    argv = ["--format", "json", "torus-spectrum", "fixture:e8", "--cutoff", "4"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first
    assert json.loads(first)["rows"][1] == {"eigenvalue": 8 * math.pi**2, "multiplicity": 240, "norm_sq_exact": "2"}


def test_emit_roundtrip_lattice(capsys, tmp_path, grams):
    target = tmp_path / "out.json"
    run(capsys, "--emit", str(target), "torus-spectrum", grams["id"])
    assert load_lattice(target) == load_lattice(grams["id"])
    run(capsys, "--emit", str(target), "isospec", grams["d24"], grams["2I"])
    assert load_form(target) == load_form(grams["d24"])


def test_emit_roundtrip_polygon(capsys, tmp_path):
    src = write(tmp_path, "p.json", [[0, 0], ["1/2", 0], [0, 1]])
    target = tmp_path / "emitted.json"
    code, _, _ = run(capsys, "--emit", str(target), "polygeom", "--hausdorff", src, src)
    assert code == 0 and load_polygon(target) == load_polygon(src)
    code, _, err = run(capsys, "--emit", str(target), "weyl", "--lambda", "1")
    assert code == 1 and "--emit" in err


def test_corner_rows(capsys):
    code, out, _ = run(capsys, "corner", "--theta", "pi", "3pi/4")
    table = rows(out)
    assert table[0] == ["theta", "carslaw_integral", "corner_coefficient"]
    assert float(table[1][1]) == pytest.approx(2 / 3, abs=1e-10)
    assert float(table[1][2]) == 0.0
    assert float(table[2][2]) > 0
    code, out, _ = run(capsys, "corner", "--ngon", "100")
    assert abs(float(rows(out)[1][2])) <= 2e-3


def test_weyl_rows(capsys):
    code, out, _ = run(capsys, "weyl", "--sides", "1", "1", "--lambda", "0", "1e4")
    table = rows(out)
    assert table[0] == ["lambda", "N", "weyl_ratio"]
    assert table[1][1:] == ["0", "0"]
    assert abs(float(table[2][2]) - 1) < 0.05


def test_heat_trace_box_and_polygon(capsys, tmp_path):
    code, out, _ = run(capsys, "heat-trace", "--box", "1", "1", "--t", "0.01")
    t, eig, exp_, res = map(float, rows(out)[1])
    assert eig == pytest.approx(5.387, abs=5e-4)
    assert res == pytest.approx(0.25, abs=1e-6)
    hexagon = [[math.cos(k * math.pi / 3), math.sin(k * math.pi / 3)] for k in range(6)]
    src = write(tmp_path, "hex.json", hexagon)
    code, out, _ = run(capsys, "--format", "json", "heat-trace", "--polygon", src, "--t", "0.01")
    payload = json.loads(out)
    assert code == 0 and payload["rows"][0]["eigensum"] is None
    assert payload["corner_constant"] == pytest.approx(0.208333, abs=1e-6)


def test_polygeom_commands(capsys):
    code, out, _ = run(capsys, "polygeom", "--staircase", "7")
    k, sides, per, haus, _ = rows(out)[1]
    assert (k, sides) == ("7", "128") and float(per) == pytest.approx(128 / 7)
    assert float(haus) <= 1 / 7
    for name, chi, holes in [("disk", "1", "0"), ("annulus", "0", "1"), ("two-holes", "-1", "2")]:
        code, out, _ = run(capsys, "polygeom", "--euler", f"fixture:{name}")
        assert rows(out)[1][3:] == [chi, holes]


def test_out_flag(capsys, tmp_path):
    target = tmp_path / "o.csv"
    code, out, _ = run(capsys, "--out", str(target), "weyl", "--lambda", "10")
    assert code == 0 and out == ""
    assert target.read_text().startswith("lambda,N,weyl_ratio\n")


def test_parse_angle():
    assert cli.parse_angle("pi") == math.pi
    assert cli.parse_angle("3pi/4") == pytest.approx(0.75 * math.pi)
    assert cli.parse_angle("0.8*pi") == pytest.approx(0.8 * math.pi)
    assert cli.parse_angle("2.5") == 2.5
