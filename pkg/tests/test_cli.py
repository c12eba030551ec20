import json
import subprocess
import sys
from pathlib import Path

import pytest

from artifact.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def prop19(tmp_path, capsys):
    inst, cov = tmp_path / "p19.txt", tmp_path / "p19.cov"
    assert run(capsys, "gen", "prop19", "--k", 2, "--out", inst, "--cover-out", cov)[0] == 0
    return inst, cov


def test_gen_matches_golden(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert run(capsys, "gen", "prop18", "--k", 1, "--out", out)[0] == 0
    assert out.read_text() == (GOLDEN / "prop18_k1.txt").read_text()
    code, text, _ = run(capsys, "gen", "prop18", "--k", 2)
    assert code == 0 and "p map 22 32" in text


def test_solve_then_verify(prop19, tmp_path, capsys):
    inst, _cov = prop19
    sol = tmp_path / "p19.sol"
    code, text, _ = run(capsys, "solve", inst, "--out", sol)
    assert code == 0
    rep = json.loads(text)
    assert rep["guarantee"] == "cost <= 7/4 lb" and "trace" not in rep
    assert 4 * rep["cost"] <= 7 * rep["lb"]
    code, text, _ = run(capsys, "verify", inst, sol)
    assert code == 0 and text.startswith("ok")


def test_solve_from_pinned_cover(prop19, capsys):
    inst, cov = prop19
    code, text, _ = run(capsys, "solve", inst, "--cover", cov, "--audit", "full")
    rep = json.loads(text)
    assert code == 0 and rep["cost"] == 20 and rep["trace"]["kind"] == "leaf"


def test_verify_failures(prop19, tmp_path, capsys):
    inst, cov = prop19
    lines = cov.read_text().splitlines()
    # a 2-edge cover with bridges is not a 2-ECSS
    assert run(capsys, "verify", inst, cov)[0] == 1
    bad_cost = tmp_path / "cost.sol"
    head = lines[0].split()
    bad_cost.write_text(" ".join(head[:3] + [str(int(head[3]) + 1)]) + "\n" + "\n".join(lines[1:]) + "\n")
    code, _, err = run(capsys, "verify", inst, bad_cost)
    assert code == 1 and "declared cost" in err
    missing = tmp_path / "missing.sol"
    missing.write_text(f"s 22 1 1\ne 1 22 1\n")
    code, _, err = run(capsys, "verify", inst, missing)
    assert code == 1 and "not in the instance" in err
    other = tmp_path / "nodes.sol"
    other.write_text("s 5 0 0\n")
    assert run(capsys, "verify", inst, other)[0] == 1


def test_oracle_and_its_cap(tmp_path, capsys):
    small, big = tmp_path / "a.txt", tmp_path / "b.txt"
    run(capsys, "gen", "prop19", "--k", 1, "--out", small)
    run(capsys, "gen", "prop18", "--k", 2, "--out", big)
    code, text, _ = run(capsys, "oracle", small)
    assert code == 0 and "opt 11" in text and "tau 10" in text
    code, _, err = run(capsys, "oracle", big)
    assert code == 2 and "cap" in err
    assert run(capsys, "oracle", big, "--cap", 40)[0] == 0


def test_bad_input_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("p map 2 2\ne 1 2 1\ne 1 2 3\n")
    code, _, err = run(capsys, "solve", bad)
    assert code == 2 and "line 3" in err
    assert run(capsys, "solve", tmp_path / "nope.txt")[0] == 2
    code, _, _ = run(capsys, "gen", "prop18", "--cover-out", tmp_path / "x")
    assert code == 2


def test_audit_command(capsys):
    path = GOLDEN / "prop19_k1.txt"
    code, text, _ = run(capsys, "audit", path)
    assert code == 0 and text.splitlines()[-1].startswith("PASS")


def test_module_entry_point(tmp_path):
    out = subprocess.run([sys.executable, "-m", "artifact.cli", "gen", "cex-c"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.startswith("# counterexample c")
