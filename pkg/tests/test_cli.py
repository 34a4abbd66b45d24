import json
import subprocess
import sys
from pathlib import Path

import pytest

from intcyc.cli import main
from intcyc.verify import Coloring

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_tree(capsys, fixture_dir):
    code, out, _ = run(capsys, "analyze", fixture_dir / "path-4.json")
    doc = json.loads(out)
    assert code == 0
    assert doc["delta"] == 2 and doc["m_of_h"] == 3 and doc["theta"] == [2, 3]
    assert doc["provenance"] == "formula"


def test_analyze_exact_cycle(capsys, fixture_dir):
    code, out, _ = run(capsys, "analyze", fixture_dir / "cycle-4.json", "--exact")
    doc = json.loads(out)
    assert code == 0 and doc["theta"] == [2, 3] and doc["theta_cyc"] == [2, 3, 4]
    assert doc["provenance"] == "oracle" and "m_of_h" not in doc


def test_analyze_exit_codes(capsys, fixture_dir, tmp_path):
    assert run(capsys, "analyze", fixture_dir / "cycle-4.json")[0] == 3
    assert run(capsys, "analyze", tmp_path / "missing.json")[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("0 0\n")
    assert run(capsys, "analyze", bad)[0] == 2
    big = tmp_path / "big.txt"
    big.write_text("".join(f"{i} {(i + 1) % 12}\n" for i in range(12)))
    assert run(capsys, "analyze", big, "--exact")[0] == 4


def test_color(capsys, fixture_dir, tmp_path):
    code, out, _ = run(capsys, "color", fixture_dir / "star-3.json", "--t", 3)
    assert code == 0 and json.loads(out)["colors"] == [1, 2, 3]
    code, out, err = run(capsys, "color", fixture_dir / "path-4.json", "--t", 4)
    assert code == 5 and "feasible range [2,3]" in err and out == ""
    assert run(capsys, "color", fixture_dir / "cycle-4.json", "--t", 2)[0] == 3
    target = tmp_path / "spider5.json"
    code, out, _ = run(capsys, "color", fixture_dir / "spider-3-2.json", "--t", 5, "--output", target)
    assert code == 0 and out == ""
    code, out, _ = run(capsys, "verify", fixture_dir / "spider-3-2.json", target, "--mode", "interval")
    assert code == 0 and json.loads(out)["pass"] is True


def test_color_round_trip_all_modes(capsys, fixture_dir, tmp_path):
    for name in ("path-6", "star-4", "spider-3-2", "path-8"):
        for mode in ("interval", "cyclic"):
            t = 4
            code, out, _ = run(capsys, "color", fixture_dir / f"{name}.json", "--t", t, "--mode", mode)
            if code == 5:
                continue
            f = tmp_path / "c.json"
            f.write_text(out)
            assert run(capsys, "verify", fixture_dir / f"{name}.json", f, "--mode", mode)[0] == 0


def test_verify_c3(capsys, fixture_dir, tmp_path):
    f = tmp_path / "c3.json"
    f.write_text(Coloring(3, (1, 2, 3)).to_json())
    assert run(capsys, "verify", fixture_dir / "cycle-3.json", f, "--mode", "cyclic")[0] == 0
    code, out, err = run(capsys, "verify", fixture_dir / "cycle-3.json", f, "--mode", "interval")
    doc = json.loads(out)
    assert code == 1 and doc["pass"] is False
    assert doc["witness"] == {"kind": "star", "vertex": 0, "star": [1, 3]}
    assert "{1, 3}" in err
    f.write_text('{"t": 3, "colors": [1, 2]}')
    assert run(capsys, "verify", fixture_dir / "cycle-3.json", f)[0] == 2
    f.write_text('{"t": 3, "colors": [1, 2')
    assert run(capsys, "verify", fixture_dir / "cycle-3.json", f)[0] == 2


def test_export_dot(capsys, fixture_dir, tmp_path):
    f = tmp_path / "p4.json"
    f.write_text(Coloring(3, (1, 2, 3)).to_json())
    code, out, _ = run(capsys, "export-dot", fixture_dir / "path-4.json", f)
    assert code == 0 and out == (GOLDEN / "path-4-colored.dot").read_text()
    code, out, _ = run(capsys, "export-dot", fixture_dir / "path-4.json")
    assert code == 0 and "label" not in out and "0 -- 1;" in out
    assert run(capsys, "export-dot", tmp_path / "nope.json")[0] == 2


def test_spectrum(capsys, fixture_dir):
    code, out, _ = run(capsys, "spectrum", fixture_dir / "k-2-2.json")
    doc = json.loads(out)
    assert code == 0 and doc["graph_id"] == "k-2-2"
    assert doc["theta_exact"] == [2, 3] and doc["theta_cyc_exact"] == [2, 3, 4]
    code, out, _ = run(capsys, "spectrum", fixture_dir / "k-2-2.json", "--t-max", 2)
    assert json.loads(out)["t_max"] == 2
    assert run(capsys, "spectrum", fixture_dir / "path-8.json", "--limit-edges", 5)[0] == 4


def test_catalog(capsys):
    code, out, _ = run(capsys, "catalog", "--max-edges", 6)
    records = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(records) == 1 + 1 + 2 + 3 + 6 + 11
    assert all(r["agree"] for r in records)
    code, out, _ = run(capsys, "catalog", "--max-edges", 1)
    (rec,) = [json.loads(line) for line in out.splitlines()]
    assert rec["theta_oracle"] == [1] and rec["n"] == 2
    assert run(capsys, "catalog", "--max-edges", 11)[0] == 4


def test_argparse_errors_exit_2(fixture_dir):
    with pytest.raises(SystemExit) as exc:
        main(["color", str(fixture_dir / "path-4.json")])
    assert exc.value.code == 2


def test_subprocess_determinism(fixture_dir):
    argv = [sys.executable, "-m", "intcyc", "color", str(fixture_dir / "spider-3-2.json"), "--t", "4"]
    a = subprocess.run(argv, capture_output=True, check=True).stdout
    b = subprocess.run(argv, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["t"] == 4
