import json

import pytest

import trilength.embedding
from trilength.cli import EXIT_INPUT, EXIT_OK, EXIT_REJECT, main


@pytest.fixture
def c5(tmp_path):
    f = tmp_path / "c5.txt"
    f.write_text("n=5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    return str(f)


@pytest.fixture
def k4(tmp_path):
    f = tmp_path / "k4.txt"
    f.write_text("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")
    return str(f)


def test_check(c5, k4, capsys):
    assert main(["check", c5]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "outerplanar"
    assert main(["check", k4]) == EXIT_REJECT
    assert capsys.readouterr().out.startswith("not outerplanar")


def test_unreadable_and_malformed(tmp_path, capsys):
    assert main(["check", str(tmp_path / "missing.txt")]) == EXIT_INPUT
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n1 2 3\n")
    assert main(["check", str(bad)]) == EXIT_INPUT
    assert "line 2" in capsys.readouterr().err


def test_draw_rejects_non_outerplanar(k4):
    assert main(["draw", k4]) == EXIT_REJECT


def test_draw_json_with_lengths(c5, tmp_path):
    out = tmp_path / "d.json"
    assert main(["draw", c5, "--lengths", "1,0.8,0.55", "--format", "json", "-o", str(out)]) == EXIT_OK
    doc = json.loads(out.read_text())
    assert sorted(doc["class_lengths"]) == pytest.approx([0.55, 0.8, 1.0], rel=1e-12)


def test_draw_is_deterministic(c5, capsys):
    main(["draw", c5, "--seed", "3"])
    first = capsys.readouterr().out
    main(["draw", c5, "--seed", "3"])
    assert capsys.readouterr().out == first
    assert first.startswith("<?xml")


def test_env_seed_matches_flag(c5, capsys, monkeypatch):
    main(["draw", c5, "--seed", "12", "--format", "json"])
    flagged = capsys.readouterr().out
    monkeypatch.setenv("TRILENGTH_SEED", "12")
    main(["draw", c5, "--format", "json"])
    assert capsys.readouterr().out == flagged
    monkeypatch.setenv("TRILENGTH_SEED", "twelve")
    assert main(["draw", c5]) == EXIT_INPUT


@pytest.mark.parametrize(
    "extra",
    [["--seed", "1", "--lengths", "1,1,1"], ["--seed", "1", "--theta0", "1", "--theta1", "2"], ["--theta0", "1"]],
)
def test_parameter_flags_are_exclusive(c5, extra):
    assert main(["draw", c5, *extra]) == EXIT_INPUT


def test_bad_lengths(c5):
    assert main(["draw", c5, "--lengths", "1,2"]) == EXIT_INPUT
    assert main(["draw", c5, "--lengths", "1,0,2"]) == EXIT_INPUT


def test_tstar(capsys):
    assert main(["tstar", "--depth", "0", "--format", "json"]) == EXIT_OK
    assert len(json.loads(capsys.readouterr().out)["vertices"]) == 4
    assert main(["tstar", "--depth", "2", "--format", "json"]) == EXIT_OK
    assert len(json.loads(capsys.readouterr().out)["vertices"]) == 28
    assert main(["tstar", "--depth", "11"]) == EXIT_INPUT


def test_encode_decode(capsys):
    assert main(["encode", "L,F,L,L"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "q=(0,1,0,0) rho=(0,0,0) m=3" in out and "proper=false" in out
    assert main(["decode", "--q", "0,2", "--rho", "0"]) == EXIT_OK
    assert "address=L,F,F" in capsys.readouterr().out
    assert main(["encode", "L,Q"]) == EXIT_INPUT
    assert main(["decode", "--q", "0", "--rho", "0"]) == EXIT_INPUT


def test_selftest_small(capsys):
    assert main(["selftest", "--max-n", "4", "--depth", "3", "--samples", "3"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 10 and all(l.startswith("PASS") for l in lines)
    assert main(["selftest", "--max-n", "8"]) == EXIT_INPUT


def test_selftest_catches_a_broken_turn_rule(monkeypatch, capsys):
    monkeypatch.setattr(trilength.embedding, "_turn_parity", lambda ty, run, right: ty ^ int(right))
    assert main(["selftest", "--max-n", "3", "--depth", "3", "--samples", "3"]) == EXIT_REJECT
    assert "FAIL" in capsys.readouterr().out
