import json
import subprocess
import sys

import pytest

from enhanced_power.catalog import save_group
from enhanced_power.cli import run


def test_analyze_q8(capsys):
    assert run(["analyze", "Q8"]) == 0
    out = capsys.readouterr().out
    assert "|K(G)|     2" in out and "methods agree: True" in out
    assert "diameter   2" in out
    assert "generalized quaternion True" in out


def test_analyze_from_file(tmp_path, capsys, named):
    path = tmp_path / "s3.json"
    save_group(named("S3"), path)
    assert run(["analyze", str(path)]) == 0
    assert "diameter   infinite" in capsys.readouterr().out


def test_analyze_trivial(capsys):
    assert run(["analyze", "C1"]) == 0
    assert "trivial" in capsys.readouterr().out


def test_verify_b(capsys):
    assert run(["verify-b", "--max-order", "100"]) == 0
    assert "0 disagreements" in capsys.readouterr().out


def test_verify_a_report(tmp_path, capsys):
    path = tmp_path / "r.csv"
    assert run(["verify-a", "--max-order", "24", "--report", str(path), "--format", "csv"]) == 0
    lines = path.read_text().splitlines()
    assert lines[0].startswith("schema,name,order,p")
    assert any(line.startswith("1,SL2_3,24,2,True,CASE_2B_SL23") for line in lines)


def test_verify_a_timing(tmp_path):
    path = tmp_path / "r.jsonl"
    assert run(["verify-a", "--max-order", "6", "--report", str(path), "--timing"]) == 0
    docs = [json.loads(line) for line in path.read_text().splitlines()]
    assert docs and all(isinstance(d["elapsed"], float) for d in docs)


def test_graph_dot(tmp_path, capsys):
    path = tmp_path / "s3.dot"
    assert run(["graph", "S3", "--dot", str(path)]) == 0
    text = path.read_text()
    assert text.startswith('graph "Delta(S3)" {') and "  2 -- 5;" in text
    assert run(["graph", "C3"]) == 0
    assert "fillcolor=gold" in capsys.readouterr().out


def test_catalog_list(capsys):
    assert run(["catalog", "--max-order", "8", "--list"]) == 0
    out = capsys.readouterr().out
    assert "Q8" in out and "14 groups" in out


def test_scan(capsys):
    assert run(["scan-open-question", "--max-order", "60"]) == 0
    out = capsys.readouterr().out
    assert "C30" not in out  # cyclic groups are not scanned
    assert "three-prime groups scanned" in out


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["analyze"],
        ["analyze", "NOPE"],
        ["analyze", "SL2_9"],
        ["graph", "C1"],
        ["verify-a", "--max-order", "x"],
        ["verify-b", "--max-order", "0"],
        ["catalog", "--max-order", "9999"],
        ["verify-a", "--max-order", "4", "--format", "xml"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    try:
        code = run(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_bad_spec_file_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"kind": "cayley", "n": 2, "table": [[0, 1], [0, 1]]}))
    assert run(["analyze", str(path)]) == 2
    assert "error" in capsys.readouterr().err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "enhanced_power", "analyze", "C3xQ8"], capture_output=True, text=True)
    assert proc.returncode == 0 and "|K(G)|     6" in proc.stdout
