"""Command line behavior: formats, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from hypospec.cli import _parse_n_range, main
from hypospec.families import FamilySpec, family_hypergraph
from hypospec.hypergraph import Hypergraph


@pytest.fixture
def x3_file(tmp_path):
    path = tmp_path / "x3.hg"
    assert main(["gen", "--family", "X", "--n", "3", "--out", str(path)]) == 0
    return str(path)


@pytest.fixture
def y3_file(tmp_path):
    path = tmp_path / "y3.hg"
    assert main(["gen", "--family", "Y", "--n", "3", "--out", str(path)]) == 0
    return str(path)


def test_parse_n_range():
    assert _parse_n_range("4") == [4]
    assert _parse_n_range("3..5") == [3, 4, 5]
    with pytest.raises(ValueError):
        _parse_n_range("5..3")


def test_gen_text_stdout(capsys):
    assert main(["gen", "--family", "X", "--n", "3"]) == 0
    out, err = capsys.readouterr()
    hg = Hypergraph.from_text(out)
    assert hg.num_vertices == 9 and hg.num_edges == 28
    assert "28 edges" in err


def test_gen_json_inferred_from_extension(tmp_path, capsys):
    path = tmp_path / "gamma3.json"
    assert main(["gen", "--family", "Gamma", "--n", "3", "--out", str(path)]) == 0
    capsys.readouterr()
    hg = Hypergraph.from_json(path.read_text())
    assert hg == family_hypergraph(FamilySpec("Gamma", 3))


def test_gen_layer_family_needs_k(capsys):
    assert main(["gen", "--family", "G", "--n", "3"]) == 2
    assert "error:" in capsys.readouterr().err


def test_gen_rejects_unknown_family():
    assert main(["gen", "--family", "Q", "--n", "3"]) == 2


def test_spectrum_text_output(tmp_path, capsys):
    path = tmp_path / "single.hg"
    path.write_text(Hypergraph(3, [1, 2, 3], [(1, 2, 3)]).to_text(), encoding="ascii")
    assert main(["spectrum", str(path)]) == 0
    out, _ = capsys.readouterr()
    lines = out.splitlines()
    assert lines[0] == "# tol 1e-12 max-iter 1000000 shift 1 seed 0"
    assert "rank 3 vertices 3 edges 1" in lines
    values = {line.split()[0]: line.split()[1] for line in lines if " " in line}
    assert abs(float(values["lambda_hi"]) - 1.0) < 1e-10


def test_spectrum_json_with_oracle(x3_file, capsys):
    assert main(["spectrum", x3_file, "--format", "json", "--restarts", "3"]) == 0
    record = json.loads(capsys.readouterr().out)
    assert {"lambda_lo", "lambda_hi", "residual", "iterations",
            "vector_digest", "oracle"} <= record.keys()
    assert record["lambda_lo"] <= record["oracle"] <= record["lambda_hi"] + 1e-8


def test_spectrum_missing_file(capsys):
    assert main(["spectrum", "/nonexistent/path.hg"]) == 2
    assert "error:" in capsys.readouterr().err


def test_compare_certifies_and_is_deterministic(capsys):
    assert main(["compare", "--n", "3"]) == 0
    first = capsys.readouterr().out
    assert "mu > lambda: certified" in first
    assert "lambda(X^3) in [" in first
    assert main(["compare", "--n", "3"]) == 0
    assert capsys.readouterr().out == first


def test_deck_writes_default_json(x3_file, tmp_path, capsys):
    assert main(["deck", x3_file]) == 0
    out, _ = capsys.readouterr()
    assert out.count("deleted ") == 9
    payload = json.loads((tmp_path / "x3.deck.json").read_text())
    assert len(payload) == 9


def test_deck_thread_count_does_not_change_output(x3_file, tmp_path, monkeypatch, capsys):
    assert main(["deck", x3_file, "--out", str(tmp_path / "serial.json")]) == 0
    serial_stdout = capsys.readouterr().out
    monkeypatch.setenv("HYPOSPEC_THREADS", "4")
    assert main(["deck", x3_file, "--out", str(tmp_path / "threaded.json")]) == 0
    assert capsys.readouterr().out == serial_stdout
    assert (tmp_path / "serial.json").read_bytes() == (tmp_path / "threaded.json").read_bytes()


def test_deck_warns_on_bad_thread_count(x3_file, monkeypatch, capsys):
    monkeypatch.setenv("HYPOSPEC_THREADS", "many")
    assert main(["deck", x3_file]) == 0
    assert "HYPOSPEC_THREADS" in capsys.readouterr().err


def test_hypomorphic_pair(x3_file, y3_file, capsys):
    assert main(["hypomorphic", x3_file, y3_file]) == 0
    out, _ = capsys.readouterr()
    assert out.splitlines()[0] == "hypomorphic: yes"
    assert out.count("eta ") == 9


def test_hypomorphic_mismatch(x3_file, tmp_path, capsys):
    other = tmp_path / "single.hg"
    other.write_text(Hypergraph(3, [1, 2, 3], [(1, 2, 3)]).to_text(), encoding="ascii")
    assert main(["hypomorphic", x3_file, str(other)]) == 1
    assert "hypomorphic: no" in capsys.readouterr().out


def test_verify_exact_only(tmp_path, capsys):
    verdict = tmp_path / "verdict.json"
    assert main(["verify", "--n", "3", "--exact-only", "--out", str(verdict)]) == 0
    out, _ = capsys.readouterr()
    assert out.count("[PASS]") == 25
    assert "[FAIL]" not in out
    assert "passed 25/25 claims" in out
    assert len(json.loads(verdict.read_text())) == 25


def test_verify_rejects_small_n(tmp_path, capsys):
    assert main(["verify", "--n", "2", "--exact-only",
                 "--out", str(tmp_path / "v.json")]) == 2
    assert "error:" in capsys.readouterr().err


def test_usage_errors_exit_two(capsys):
    assert main([]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["gen", "--family", "X"]) == 2  # --n missing
    capsys.readouterr()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hypospec", "gen",
                           "--family", "X", "--n", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert Hypergraph.from_text(proc.stdout).num_edges == 28
