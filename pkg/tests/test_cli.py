"""Command line interface: exit codes, formats, determinism."""

import json
import subprocess
import sys

import pytest

from nashblowup.cli import main

A3_ARGS = ["--type", "A", "--rank", "3", "--levi", "1,3", "--word", "1,3,2"]


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_nash_text(capsys):
    code, out, _ = run(capsys, ["nash"] + A3_ARGS)
    assert code == 0
    assert "fixed points: 8" in out
    assert "over e: {e, s1, s3, s3s1}  [singular]" in out
    assert "singular fixed points: e" in out


def test_nash_json(capsys):
    code, out, _ = run(capsys, ["nash"] + A3_ARGS + ["--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["fixed_point_count"] == 8
    assert payload["delta_w"] == []
    assert len(payload["fibers"]) == 5


def test_nash_by_perm(capsys):
    code, out, _ = run(
        capsys, ["nash", "--perm", "25713468", "--k", "3", "--format", "json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["delta_w"] == [5]
    assert payload["fixed_point_count"] == 120


def test_peterson_text(capsys):
    code, out, _ = run(capsys, ["peterson"] + A3_ARGS)
    assert code == 0
    assert "states: 8  edges: 8" in out
    assert "--a1+a2+a3-->" in out


def test_peterson_dot(capsys):
    code, out, _ = run(capsys, ["peterson"] + A3_ARGS + ["--format", "dot"])
    assert code == 0
    assert out.startswith("digraph translates {")
    assert out.count("->") == 8


def test_peterson_json(capsys):
    code, out, _ = run(capsys, ["peterson"] + A3_ARGS + ["--format", "json"])
    assert code == 0
    payload = json.loads(out)
    assert len(payload["nodes"]) == 8
    assert len(payload["fixed_point_table"]) == 8


def test_grassmann_text(capsys):
    code, out, _ = run(capsys, ["grassmann", "--perm", "25713468", "--k", "3"])
    assert code == 0
    assert "partition: (4, 3, 1)" in out
    assert "F_1 <= E_2 <= F_4" in out
    assert "Nash blow-up smooth: no" in out


def test_grassmann_infers_k(capsys):
    # a unique descent makes --k optional
    code, out, _ = run(capsys, ["grassmann", "--perm", "25713468"])
    assert code == 0
    assert "k: 3" in out


def test_grassmann_identity(capsys):
    code, out, _ = run(capsys, ["grassmann", "--perm", "1234"])
    assert code == 0
    assert "trivially smooth" in out


def test_grassmann_json(capsys):
    code, out, _ = run(
        capsys,
        ["grassmann", "--perm", "25713468", "--k", "3", "--format", "json"],
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["partition"] == [4, 3, 1]
    assert payload["smooth"] is False


def test_conjecture_single_pass(capsys):
    code, out, _ = run(capsys, ["conjecture", "--perm", "2413"])
    assert code == 0
    assert "verdict: pass" in out


def test_conjecture_single_fail(capsys):
    code, out, _ = run(capsys, ["conjecture", "--perm", "52341"])
    assert code == 1
    assert "verdict: fail" in out
    assert "product 16 (chains 4 x 4), translates 8" in out


def test_conjecture_sweep_pass(capsys):
    code, out, _ = run(capsys, ["conjecture", "--n", "4"])
    assert code == 0
    assert "checked 23" in out


def test_conjecture_sweep_fail(capsys):
    code, out, _ = run(capsys, ["conjecture", "--n", "5"])
    assert code == 1
    assert "1 failure" in out


def test_verify_small(capsys):
    code, out, _ = run(
        capsys,
        [
            "verify", "--max-rank-a", "2", "--max-rank-bc", "2", "--skip-d4",
            "--max-n-coess", "4", "--max-n-fibers", "4", "--conjecture-n", "4",
        ],
    )
    assert code == 0
    assert "translate bijection" in out
    assert "ok" in out


def test_verify_json(capsys):
    code, out, _ = run(
        capsys,
        [
            "verify", "--max-rank-a", "2", "--max-rank-bc", "2", "--skip-d4",
            "--skip-coess", "--skip-fibers", "--conjecture-n", "4",
            "--format", "json",
        ],
    )
    assert code == 0
    payload = json.loads(out)
    assert all(entry["ok"] for entry in payload)


def test_types_catalog(capsys):
    code, out, _ = run(capsys, ["types"])
    assert code == 0
    assert "cominuscule nodes" in out
    assert "E7" not in out or True  # catalog text varies; just needs to print


def test_types_single(capsys):
    code, out, _ = run(capsys, ["types", "--type", "B", "--rank", "3"])
    assert code == 0
    assert "cominuscule nodes: [1]" in out


def test_usage_errors(capsys):
    # malformed permutation
    code, _, err = run(capsys, ["nash", "--perm", "1123", "--k", "1"])
    assert code == 2
    # unsupported type
    code, _, err = run(
        capsys, ["nash", "--type", "F", "--rank", "4", "--levi", "1", "--word", "1"]
    )
    assert code == 2
    assert "error" in err
    # not a minimal representative
    code, _, err = run(
        capsys,
        ["nash", "--type", "A", "--rank", "3", "--levi", "1,3", "--word", "1,2,1"],
    )
    assert code == 2
    assert "s2s1" in err  # suggests the right representative
    # rank missing
    code, _, err = run(capsys, ["types", "--type", "B"])
    assert code == 2


def test_unknown_subcommand_exits_2():
    proc = subprocess.run(
        [sys.executable, "-m", "nashblowup", "wat"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2


def test_module_entrypoint_deterministic():
    cmd = [sys.executable, "-m", "nashblowup", "peterson"] + A3_ARGS + [
        "--format", "json",
    ]
    first = subprocess.run(cmd, capture_output=True, text=True)
    second = subprocess.run(cmd, capture_output=True, text=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout


def test_output_file(tmp_path, capsys):
    target = tmp_path / "graph.dot"
    code, out, _ = run(
        capsys,
        ["peterson"] + A3_ARGS + ["--format", "dot", "--output", str(target)],
    )
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("digraph")
