import json

import pytest

from toughseq.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    payload = json.loads(out)
    assert payload["schema"] == 1
    return code, payload


def test_check_tough_negative(capsys):
    code, out, _ = run(capsys, "check", "--tough", "1/1", "--seq", "2^2 3^3 5")
    assert code == 1
    assert "declared: no" in out
    assert "failing index: 2" in out
    assert "blocking sequence: 2^2 3^2 5^2" in out


def test_check_hamiltonian_positive(capsys):
    code, out, _ = run(capsys, "check", "--hamiltonian", "--seq", "4^5")
    assert code == 0
    assert "declared: yes" in out


def test_check_tough_below_one(capsys):
    code, out, _ = run(capsys, "check", "--tough", "1/2", "--seq", "1^2 2^3")
    assert code == 1
    assert "rule ii" in out


def test_check_connected(capsys):
    code, _, _ = run(capsys, "check", "--connected", "1", "--seq", "1 2^3 3")
    assert code == 0


def test_check_json_mirrors_verdict(capsys):
    code, payload = run_json(capsys, "check", "--tough", "1/1", "--seq", "2^2 3^3 5")
    assert code == 1
    assert payload["declared"] is False
    assert payload["failing_index"] == 2
    assert payload["blocking_sequence"] == [2, 2, 3, 3, 5, 5]
    assert payload["blocking_graph_spec"]["join_clique"] == 2
    texts = [c["text"] for c in payload["conditions"]]
    assert texts == ["d1>=2 | d5>=5", "d2>=3 | d4>=4"]


def test_check_rejects_nongraphical(capsys):
    code, _, err = run(capsys, "check", "--hamiltonian", "--seq", "1 3^3")
    assert code == 2
    assert "not graphical" in err
    code, out, _ = run(capsys, "check", "--hamiltonian", "--seq", "1 3^3",
                       "--allow-nongraphical")
    assert code == 0


def test_check_rejects_floats_and_bad_input(capsys):
    assert run(capsys, "check", "--tough", "1.5", "--seq", "4^5")[0] == 2
    assert run(capsys, "check", "--tough", "1/1", "--seq", "nonsense")[0] == 2


def test_toughness_command(capsys, tmp_path):
    fp = tmp_path / "k4.txt"
    fp.write_text("4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    code, out, _ = run(capsys, "toughness", str(fp))
    assert code == 0
    assert "tau = 3/1" in out

    fp2 = tmp_path / "p3.txt"
    fp2.write_text("3\n0 1\n1 2\n")
    code, out, _ = run(capsys, "toughness", str(fp2))
    assert code == 0
    assert "tau = 1/2" in out
    assert "witness cutset: {1}" in out

    fp3 = tmp_path / "disc.json"
    fp3.write_text(json.dumps({"n": 5, "edges": [[0, 1], [0, 2], [1, 2], [3, 4]]}))
    code, out, _ = run(capsys, "toughness", str(fp3))
    assert code == 0
    assert "tau = 0/1" in out

    assert run(capsys, "toughness", str(tmp_path / "missing.txt"))[0] == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("3\n0 1\n0 1\n")
    assert run(capsys, "toughness", str(bad))[0] == 2


def test_sinks_command(capsys):
    code, out, _ = run(capsys, "sinks", "--k", "2", "--m", "9")
    assert code == 0
    assert "bound: 9/5 (holds)" in out

    code, out, _ = run(capsys, "sinks", "--k", "2", "--m", "9", "--verify-claims")
    assert code == 0
    assert "claim2" in out and "True" in out

    code, out, _ = run(capsys, "sinks", "--k", "1", "--n", "4", "--emit-conditions")
    assert code == 0
    assert "family size: 1" in out
    assert "d1>=2 | d3>=3" in out

    code, payload = run_json(capsys, "sinks", "--k", "2", "--m", "9")
    assert payload["sink_count"] >= 2
    assert payload["bound"] == {"num": 9, "den": 5}
    assert payload["groups"][0]["j"] == 1

    assert run(capsys, "sinks", "--k", "0", "--m", "3")[0] == 2


def test_theorem_command(capsys):
    code, out, _ = run(capsys, "theorem", "--t", "1", "--n", "6")
    assert code == 0
    assert out.splitlines() == ["d1>=2 | d5>=5", "d2>=3 | d4>=4"]

    code, out, _ = run(capsys, "theorem", "--t", "2", "--n", "8")
    assert code == 0
    assert len(out.splitlines()) == 4

    code, out, _ = run(capsys, "theorem", "--t", "1", "--n", "6", "--best-monotone")
    assert code == 0
    assert sorted(out.splitlines()) == ["d1>=2 | d5>=5", "d2>=3 | d4>=4"]

    assert run(capsys, "theorem", "--t", "2", "--n", "3")[0] == 2  # below threshold
    assert run(capsys, "theorem", "--t", "1/2", "--n", "6")[0] == 2  # t<1 needs sweep


def test_theorem_sweep_cap(capsys, monkeypatch):
    monkeypatch.setenv("TOUGHSEQ_MAX_N", "5")
    assert run(capsys, "theorem", "--t", "1", "--n", "6", "--best-monotone")[0] == 2
    monkeypatch.setenv("TOUGHSEQ_MAX_N", "banana")
    assert run(capsys, "theorem", "--t", "1", "--n", "6", "--best-monotone")[0] == 2


def test_partitions_command(capsys):
    code, out, _ = run(capsys, "partitions", "--r", "5")
    assert code == 0 and out.strip() == "7"

    code, out, _ = run(capsys, "partitions", "--r", "5", "--max-parts", "3")
    assert code == 0 and out.strip() == "5"

    code, out, _ = run(capsys, "partitions", "--r", "0")
    assert code == 0 and out.strip() == "1"

    code, out, _ = run(capsys, "partitions", "--r", "4", "--list")
    assert out.splitlines() == ["5", "4", "3+1", "2+2", "2+1+1", "1+1+1+1"]

    code, payload = run_json(capsys, "partitions", "--r", "5", "--max-parts", "3")
    assert payload["count"] == 5

    assert run(capsys, "partitions", "--r", "-2")[0] == 2


def test_verify_optimality_command(capsys):
    code, out, _ = run(capsys, "verify-optimality", "--condition", "d1>=2 | d5>=5",
                       "--k", "1", "--n", "6")
    assert code == 0
    assert "weakly optimal: yes" in out

    code, out, _ = run(capsys, "verify-optimality", "--condition", "d1>=2",
                       "--k", "1", "--n", "6")
    assert code == 1
    assert "weakly optimal: no" in out

    code, payload = run_json(capsys, "verify-optimality", "--condition",
                             "d2>=3 | d4>=4", "--k", "1", "--n", "6")
    assert code == 0
    assert payload["weakly_optimal"] is True
    assert payload["majorizing_sink"] == [2, 2, 3, 3, 5, 5]

    # family-sinks route works beyond the sweep cap
    code, _, _ = run(capsys, "verify-optimality", "--condition", "d2>=3",
                     "--k", "1", "--n", "12", "--family-sinks")
    assert code in (0, 1)
    assert run(capsys, "verify-optimality", "--condition", "d2>=3",
               "--k", "1", "--n", "12")[0] == 2  # over the cap without the flag


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "--seq", "4^5"])  # no property flag
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2
