import json
import subprocess
import sys

import pytest

from minorkit.canonical import canonical_form
from minorkit.cli import run
from minorkit.families import aw_plus, cube
from minorkit.formats import decode_graph6, encode_graph6, to_edge_list


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_family_formats(capsys):
    code, out, _ = call(capsys, "family", "aw+", "6", "--format", "graph6")
    assert code == 0
    assert out.splitlines() == [encode_graph6(aw_plus(6))]
    code, out, _ = call(capsys, "family", "cube", "--format", "edges")
    assert out.splitlines()[0] == "8 12"
    code, out, _ = call(capsys, "family", "wagner", "--format", "dot")
    assert out.startswith("graph wagner {") and '[label="1"]' in out


def test_minor_command(capsys):
    code, out, _ = call(capsys, "minor", "--host", "terrahawk", "--pattern", "v8e")
    assert (code, out) == (1, "false\n")
    code, out, _ = call(capsys, "minor", "--host", "v8e", "--pattern", "wagner", "--witness")
    assert code == 0
    first, rest = out.split("\n", 1)
    assert first == "true"
    assert set(json.loads(rest)) == {"branch_sets", "witnesses"}


def test_check_command(capsys):
    assert call(capsys, "check", "i4c", "wagner")[:2] == (0, "true\n")
    assert call(capsys, "check", "planar", "petersen")[:2] == (1, "false\n")
    assert call(capsys, "check", "q4c", "v8e")[:2] == (0, "true\n")
    assert call(capsys, "check", "connectivity", "K5")[:2] == (0, "4\n")


def test_canon_and_files(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text(to_edge_list(cube().relabel([3, 1, 4, 0, 5, 2, 7, 6])))
    code, out, _ = call(capsys, "canon", str(f))
    assert code == 0 and out.strip() == canonical_form(cube())
    g6 = tmp_path / "g.g6"
    g6.write_text(encode_graph6(cube()) + "\n")
    assert call(capsys, "canon", str(g6))[1].strip() == canonical_form(cube())


def test_forbidden_command(capsys):
    code, out, _ = call(capsys, "forbidden", "wagner")
    data = json.loads(out)
    assert code == 0
    assert data["labelled_edges"] == ["14", "16", "25", "27", "36", "38", "47", "58"]
    code, out, _ = call(capsys, "forbidden", "c2:8", "--pattern", "v8e")
    assert {"14", "16", "27", "25", "36", "38", "47", "58"} <= set(json.loads(out)["labelled_edges"])


def test_usage_errors(capsys, tmp_path):
    assert call(capsys, "family", "nosuch")[0] == 2
    assert call(capsys, "frobnicate")[0] == 2
    assert call(capsys, "canon", "nosuch")[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("3 5\n0 1\n")
    code, out, err = call(capsys, "canon", str(bad))
    assert code == 2 and out == "" and "malformed" in err
    assert call(capsys, "verify", "nosuch")[0] == 2
    assert call(capsys, "grow", "--seed", "k33")[0] == 2


def test_grow_is_identical_across_jobs(capsys):
    args = ["grow", "--seed", "k33", "--filter", "v8e-free", "--max-vertices", "10", "--max-edges", "20", "--stages", "3"]
    code1, out1, _ = call(capsys, *args, "--jobs", "1")
    code2, out2, _ = call(capsys, *args, "--jobs", "2")
    assert code1 == code2 == 0
    assert out1 == out2
    assert json.loads(out1)["filter"] == "v8e-minor-free"


def test_jobs_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("MINORKIT_JOBS", "2")
    args = ["grow", "--seed", "k33", "--max-vertices", "9", "--max-edges", "18", "--stages", "2"]
    _, out_env, _ = call(capsys, *args)
    monkeypatch.delenv("MINORKIT_JOBS")
    _, out_one, _ = call(capsys, *args)
    assert out_env == out_one


def test_verify_command(capsys):
    code, out, _ = call(capsys, "verify", "forbidden", "petersen")
    data = json.loads(out)
    assert code == 0 and data["ok"] is True
    code, out, _ = call(capsys, "verify", "claim1")
    assert code == 1 and json.loads(out)["summary"]["fail"] == 1


def test_verify_lemma_with_bounds(capsys):
    code, out, _ = call(capsys, "verify", "lemma4.2", "--max-vertices", "9", "--max-edges", "18", "--stages", "2")
    data = json.loads(out)
    assert code == 0
    assert data["claims"][0]["evidence"]["bounds"]["max_vertices"] == 9


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "minorkit.cli", "family", "aw+", "6"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert decode_graph6(proc.stdout.strip()) == aw_plus(6)
