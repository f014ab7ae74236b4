import json
import subprocess
import sys

import pytest

from simplex_sidon.catalog import load_catalog, load_records
from simplex_sidon.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_search_phi(capsys):
    code, out, _ = run(capsys, "search", "phi", "--h", "4", "--n", "2")
    assert code == 0
    cert = json.loads(out)
    assert cert["value"] == 19 and cert["verified"] is True


def test_verify_bh_negative(capsys, tmp_path):
    g = write(tmp_path, "g.json", {"factors": [7]})
    b = write(tmp_path, "b.json", {"elements": [[0], [1], [2]]})
    code, out, _ = run(capsys, "verify", "bh", "--group", g, "--set", b, "--h", "2")
    assert code == 1
    v = json.loads(out)
    assert v["outcome"] is False and "alpha" in v["witness"]
    b = write(tmp_path, "b3.json", {"elements": [[0], [1], [3]]})
    assert run(capsys, "verify", "bh", "--group", g, "--set", b, "--h", "2")[0] == 0


def test_bounds_table(capsys):
    code, out, _ = run(capsys, "bounds", "--h", "10", "--n", "3")
    assert code == 0
    for s in ("90", "454", "1331"):
        assert s in out
    code, out, _ = run(capsys, "bounds", "--h", "10", "--n", "3", "--format", "json")
    assert json.loads(out)["n"] == 3


def test_linalg_commands(capsys, tmp_path):
    m = write(tmp_path, "m.json", {"matrix": [[7, 0], [-3, 1]]})
    code, out, _ = run(capsys, "hnf", "--matrix", m)
    assert json.loads(out) == {"n": 2, "basis": [[7, 0], [4, 1]]}
    code, out, _ = run(capsys, "snf", "--matrix", m)
    assert json.loads(out)["d"] == [1, 7]


def test_convert_and_arrangement(capsys, tmp_path):
    s = write(tmp_path, "s.json", {"group": {"factors": [7]}, "elements": [[0], [1], [3]]})
    code, out, _ = run(capsys, "convert", "bh-to-lattice", "--set", s, "--h", "2")
    assert code == 0
    lat = json.loads(out)["lattice"]
    assert lat["basis"] == [[7, 0], [4, 1]]
    lp = write(tmp_path, "l.json", lat)
    code, out, _ = run(capsys, "convert", "lattice-to-bh", "--lattice", lp, "--h", "2")
    assert code == 0 and json.loads(out)["group"] == {"factors": [7]}
    code, out, _ = run(capsys, "convert", "lattice-to-basis", "--lattice", lp, "--h", "2")
    assert code == 1
    code, out, _ = run(capsys, "verify", "arrangement", "--shape", "diff:n=2,r=1,t=1",
                       "--lattice", lp)
    assert code == 0 and json.loads(out)["outcome"] == "tiling"


def test_discretize(capsys, tmp_path):
    b = write(tmp_path, "v.json", {"basis": [[1, 0], [0, 1]]})
    code, out, _ = run(capsys, "discretize", "--basis", b, "--h", "3", "--eps", "1/3")
    assert code == 0 and json.loads(out)["lattice"]["basis"] == [[3, 0], [0, 3]]
    code, _, _ = run(capsys, "discretize", "--basis", b, "--h", "3", "--eps", "0")
    assert code == 1


def test_tiling_and_construct(capsys):
    code, out, _ = run(capsys, "search", "tiling", "--shape", "cross:n=2,r=1")
    assert code == 0 and json.loads(out)["value"] == 5
    code, out, _ = run(capsys, "search", "tiling", "--shape", "simplex:n=2,h=2")
    assert code == 1 and json.loads(out)["found"] is False
    code, out, _ = run(capsys, "construct", "tiling", "--n", "2", "--r", "3", "--t", "2")
    assert code == 0 and json.loads(out)["value"] == 27


def test_errors_and_budget(capsys, tmp_path):
    assert run(capsys, "search", "phi", "--h", "8", "--n", "2", "--budget", "100")[0] == 3
    assert run(capsys, "search", "phi", "--h", "2")[0] == 2
    bad = write(tmp_path, "m.json", {"matrix": [[1, 2], [2, 4]]})
    assert run(capsys, "hnf", "--matrix", bad)[0] == 2
    assert run(capsys, "render", "--shape", "simplex:n=3,h=1", "--lattice",
               write(tmp_path, "l.json", {"basis": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]}))[0] == 2


def test_catalog_roundtrip(capsys, tmp_path):
    cat = tmp_path / "cat.jsonl"
    for h in (2, 3):
        assert run(capsys, "search", "phi", "--h", str(h), "--n", "2", "--catalog", str(cat))[0] == 0
    recs = load_records(cat)
    assert [r["value"] for r in recs] == [7, 12]
    assert all("timestamp" in r for r in recs)
    assert all(c.verified for c in load_catalog(cat))
    code, out, _ = run(capsys, "catalog", "list", "--catalog", str(cat))
    assert code == 0 and out.count("[ok]") == 2
    cat.write_text(cat.read_text() + "{not json\n")
    assert run(capsys, "catalog", "list", "--catalog", str(cat))[0] == 2


def test_catalog_regen(capsys):
    code, out, _ = run(capsys, "catalog", "regen")
    assert code == 0 and "11 certificates reproduced" in out


def test_render_file(capsys, tmp_path):
    lp = write(tmp_path, "l.json", {"basis": [[7, 0], [4, 1]]})
    svg = tmp_path / "x.svg"
    assert run(capsys, "render", "--shape", "diff:n=2,r=1,t=1", "--lattice", lp,
               "-o", str(svg))[0] == 0
    from pathlib import Path
    assert svg.read_text() == (Path(__file__).parent / "data" / "hexagon7.svg").read_text()


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "simplex_sidon.cli", "search", "psi",
                          "--h", "2", "--n", "2"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["value"] == 5
