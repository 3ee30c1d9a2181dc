import subprocess
import sys
from pathlib import Path

import pytest

from cayley.cli import FuzzConfig, main, parse_dims, replay, run_fuzz, run_trial
from cayley.rings import Z, Zmod

DATA = Path(__file__).resolve().parent.parent / "data"


def run(*args):
    return subprocess.run([sys.executable, "-m", "cayley", *args], capture_output=True, text=True)


def test_demo_running_instance():
    out = run("demo", str(DATA / "running_2x2.txt"))
    assert out.returncode == 0
    lines = out.stdout.splitlines()
    for name in ("det_cofactor", "det_leibniz", "det_exterior"):
        assert f"{name} = -2" in lines
    assert "chi = det(a - X) = -2 - 5*X + X^2" in lines
    assert "cayley-hamilton = verified" in lines
    i = lines.index("chi(a) =")
    assert lines[i + 1].split() == ["[0", "0]"] and lines[i + 2].split() == ["[0", "0]"]


def test_demo_identity_file(tmp_path, capsys):
    path = tmp_path / "id.txt"
    path.write_text("Z\n3\n1 0 0\n0 1 0\n0 0 1\n")
    assert main(["demo", str(path)]) == 0
    out = capsys.readouterr().out
    assert "det_cofactor = 1" in out
    # (1 - X)^3
    assert "chi = det(a - X) = 1 - 3*X + 3*X^2 - X^3" in out


def test_demo_parse_error_names_line(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("Z\ntwo\n1 2\n3 4\n")
    assert main(["demo", str(path)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_demo_missing_file(capsys):
    assert main(["demo", "/nonexistent/file"]) == 2


def test_fuzz_example_invocation_passes():
    out = run("fuzz", "--suite", "ch", "--rings", "Z,Zmod6", "--dims", "1..4", "--trials", "500", "--seed", "42")
    assert out.returncode == 0
    lines = out.stdout.splitlines()
    assert lines[-1] == "verdict=pass"
    assert "suite=ch ring=Zmod6 dim=3 trials=500 failures=0" in lines


@pytest.mark.parametrize("args", [
    ["--trials", "0"],
    ["--dims", "0..3"],
    ["--dims", "2..7"],
    ["--dims", "4..2"],
    ["--rings", "Zmod1"],
    ["--suite", "nope"],
    ["--seed", "-1"],
])
def test_fuzz_rejects_bad_flags(args):
    out = run("fuzz", *args)
    assert out.returncode != 0
    assert "verdict" not in out.stdout


def test_reports_are_byte_identical():
    args = ("fuzz", "--suite", "all", "--rings", "Z,DualZ", "--dims", "1..3", "--trials", "10", "--seed", "7")
    assert run(*args).stdout == run(*args).stdout


def test_jobs_do_not_change_results():
    cfg = FuzzConfig(rings=(Z, Zmod(6)), dims=(1, 3), trials=12, seed=3, suite="all")
    assert run_fuzz(cfg, jobs=1).lines() == run_fuzz(cfg, jobs=3).lines()


def test_parse_dims():
    assert parse_dims("1..4") == (1, 4)
    assert parse_dims("3") == (3, 3)
    with pytest.raises(ValueError):
        parse_dims("1-4")


def test_failure_is_reported_and_replayable(tmp_path, monkeypatch, capsys):
    import cayley.cli as cli

    real = cli._TRIALS["ch"]

    def flaky(ring, dim, rng):
        ok, check, inputs = real(ring, dim, rng)
        return (False, "injected", inputs) if dim == 2 else (ok, check, inputs)

    monkeypatch.setitem(cli._TRIALS, "ch", flaky)
    code = main(["fuzz", "--suite", "ch", "--rings", "Zmod6", "--dims", "1..2", "--trials", "3", "--seed", "9"])
    captured = capsys.readouterr()
    assert code == 1
    assert captured.out.splitlines()[-1] == "verdict=fail"
    failures = [l for l in captured.out.splitlines() if l.startswith("failure ")]
    assert len(failures) == 3
    assert failures == [l for l in captured.err.splitlines() if l.startswith("failure ")]
    assert "ring=Zmod6 dim=2 seed=9 trial=0 check=injected" in failures[0]

    record = tmp_path / "fail.txt"
    record.write_text("\n".join(failures) + "\n")
    results = replay(record.read_text())
    assert [ok for _, ok, _ in results] == [False] * 3

    monkeypatch.setitem(cli._TRIALS, "ch", real)
    assert main(["fuzz", "--replay", str(record)]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "verdict=pass"


def test_failure_inputs_reconstruct_the_trial_matrix():
    import random

    from cayley.cli import _enc, trial_rng
    from cayley.matrix import random_matrix

    ok, _, inputs = run_trial("ch", Zmod(6), 3, 42, 17)
    assert ok
    a = random_matrix(Zmod(6), 3, trial_rng(42, "ch", Zmod(6), 3, 17))
    assert inputs == _enc(a)


def test_timing_flag_adds_millis(capsys):
    assert main(["fuzz", "--suite", "ch", "--rings", "Z", "--dims", "1", "--trials", "2", "--timing"]) == 0
    assert "millis=" in capsys.readouterr().out
