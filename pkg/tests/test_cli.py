import json
import subprocess
import sys

import pytest

from hypercycles.cli import main
from hypercycles.hypergraph import HEdge, complete_uniform, dumps


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_almost_regular_k53(capsys, tmp_path):
    code, out, err = run(capsys, "decompose", "--mode", "almost-regular", "-n", "5", "-h", "3",
                         "--lengths", "5,5", "--seed", "0")
    assert code == 0 and "verified" in err
    d = json.loads(out)
    assert [p["length"] for p in d["parts"]] == [5, 5]
    (tmp_path / "d.json").write_text(out)
    assert run(capsys, "gen", "-n", "5", "-h", "3", "-o", str(tmp_path / "t.json"))[0] == 0
    code, out, _ = run(capsys, "verify", str(tmp_path / "t.json"), str(tmp_path / "d.json"),
                       "--lengths", "5,5", "--require", "hamiltonian,regular")
    assert code == 0 and json.loads(out)["overall_pass"]


def test_verify_failure_exits_one(capsys, tmp_path):
    _, out, _ = run(capsys, "decompose", "--mode", "almost-regular", "-n", "5", "-h", "3",
                    "--lengths", "5,5")
    d = json.loads(out)
    d["parts"][0]["vertices"] = d["parts"][0]["vertices"][::-1][1:] + d["parts"][0]["vertices"][-1:]
    (tmp_path / "d.json").write_text(json.dumps(d))
    (tmp_path / "t.json").write_text(dumps(complete_uniform(5, 3)))
    code, out, _ = run(capsys, "verify", str(tmp_path / "t.json"), str(tmp_path / "d.json"),
                       "--lengths", "4,6")
    assert code == 1 and not json.loads(out)["overall_pass"]
    code, _, err = run(capsys, "verify", str(tmp_path / "t.json"), str(tmp_path / "d.json"),
                       "--require", "shiny")
    assert code == 1 and "shiny" in err


def test_two_kn(capsys):
    code, out, _ = run(capsys, "two-kn", "-n", "7", "-c", "3")
    assert code == 0 and len(json.loads(out)["cycles"]) == 14
    code, _, err = run(capsys, "two-kn", "-n", "6", "-c", "3")
    assert code == 2 and "infeasible" in err


@pytest.mark.parametrize("argv", [
    ["gen", "-n", "3", "-h", "4"],
    ["decompose", "--mode", "corank", "-n", "5", "-h", "3", "--lengths", "4,6"],
    ["decompose", "--mode", "almost-regular", "-n", "5", "-h", "3", "--lengths", "5,5", "--seed", "-1"],
    ["two-kn", "-n", "6"],
    ["classify", "/nonexistent/file.json"],
    ["decompose", "--mode", "almost-regular", "-n", "5", "-h", "3", "--lengths", "1,4,5"],
])
def test_invalid_input_exits_one(capsys, argv):
    with pytest.raises(SystemExit) if argv == ["two-kn", "-n", "6"] else _null():
        assert main(argv) == 1
    capsys.readouterr()


class _null:
    def __enter__(self):
        return self

    def __exit__(self, *exc):
        return False


def test_usage_error_exit_status(capsys):
    with pytest.raises(SystemExit) as info:
        main(["two-kn", "-n", "6"])
    assert info.value.code == 1


def test_unsupported_and_best_effort(capsys):
    code, _, err = run(capsys, "decompose", "--mode", "fixed-length", "-n", "10", "-h", "3", "-c", "5")
    assert code == 2 and "no case applies" in err
    code, out, _ = run(capsys, "decompose", "--mode", "fixed-length", "-n", "10", "-h", "3", "-c", "5",
                       "--best-effort")
    assert code == 0 and {p["length"] for p in json.loads(out)["parts"]} == {5}


def test_hall_certificate_is_emitted(capsys, tmp_path):
    leave = tmp_path / "leave.json"
    leave.write_text(json.dumps([HEdge((1, 2, x)).to_dict() for x in range(3, 8)]))
    cert = tmp_path / "cert.json"
    code, out, err = run(capsys, "decompose", "--mode", "fixed-length", "-n", "7", "-h", "3", "-c", "6",
                         "--leave", str(leave), "--best-effort", "--emit-certificate", str(cert))
    assert code == 2 and out == "" and "no perfect matching" in err
    c = json.loads(cert.read_text())
    S = {tuple(e["v"]) for e in c["S"]}
    N = {tuple(p["v"]): p["capacity"] for p in c["N(S)"]}
    assert len(S) > sum(N.values())
    # N(S) is closed: no pair of an S edge lies outside it unless it has no copies
    from hypercycles.graph_cycles import build_H
    mult = build_H(7, 3, 6, leave_size=5).pair_multiplicity()
    for s in S:
        for a in s:
            for b in s:
                if a < b and mult.get((a, b), 0):
                    assert N[(a, b)] == mult[(a, b)]


def test_budget_env_override(capsys, monkeypatch):
    monkeypatch.setenv("HYPERCYCLES_BUDGET", "1")
    code, _, err = run(capsys, "two-kn", "-n", "9", "-c", "8")
    assert code == 3 and "search failed" in err
    monkeypatch.setenv("HYPERCYCLES_BUDGET", "lots")
    assert run(capsys, "two-kn", "-n", "9", "-c", "8")[0] == 1
    monkeypatch.delenv("HYPERCYCLES_BUDGET")
    assert run(capsys, "two-kn", "-n", "9", "-c", "8")[0] == 0


def test_auto_mode_and_corank_input(capsys, tmp_path):
    code, out, err = run(capsys, "decompose", "-n", "8", "-h", "5", "--lengths", ",".join(["8"] * 7))
    assert code == 0 and err.startswith("almost-regular")
    p = tmp_path / "t.json"
    p.write_text(dumps(complete_uniform(6, 4)))
    code, out, err = run(capsys, "decompose", "--input", str(p), "--lengths", "3,4,4,4")
    assert code == 0 and err.startswith("corank")


def test_outputs_are_byte_identical(capsys):
    argv = ["decompose", "--mode", "fixed-length", "-n", "16", "-h", "14", "-c", "16", "--seed", "3"]
    a = run(capsys, *argv)[1]
    b = run(capsys, *argv)[1]
    assert a == b and a


def test_shadow_bounds(capsys):
    code, out, _ = run(capsys, "shadow-bounds", "-n", "8", "-h", "2", "--samples", "30")
    assert code == 0
    rows = out.strip().split("\n")[1:]
    assert rows and all(r.endswith("True") for r in rows)


def test_classify(capsys, tmp_path):
    p = tmp_path / "g.json"
    p.write_text(dumps(complete_uniform(4, 3)))
    code, out, _ = run(capsys, "classify", str(p), "-h", "3")
    assert code == 0 and json.loads(out)


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "hypercycles", "two-kn", "-n", "4", "-c", "4"],
                       capture_output=True, text=True)
    assert r.returncode == 2 and r.stdout == ""
