import csv
import io
import json
import math

import pytest

from xychain import cli


def run(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_eval_high_field(capsys):
    code, out, _ = run(capsys, "eval", "--gamma", "0", "--eta", "2", "--temp", "0.1")
    assert code == 0
    got = {r["quantity"]: r["value"] for r in rows(out)}
    assert got["useful"] == "false"
    # T = 0.1 J still leaves an e^-10 admixture of the upper levels
    assert abs(float(got["max_fidelity"]) - 2 / 3) < 1e-4
    assert set(got) == {"concurrence", "fef", "max_fidelity", "ent_fidelity", "useful"}


def test_eval_rows_echo_parameters(capsys):
    _, out, _ = run(capsys, "eval", "--gamma", "0.3", "--eta", "0.4", "--J", "2", "--beta", "0.5")
    for r in rows(out):
        assert (r["gamma"], r["eta"], r["J"], r["T"]) == ("0.3", "0.4", "2.0", "2.0")


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "--temp", "2", "--format", "json")
    recs = json.loads(out)
    assert code == 0 and recs[0]["quantity"] == "concurrence"
    assert recs[0]["value"] == pytest.approx(0.0, abs=1e-15)   # above T1 at gamma = 0


def test_critical_isotropic_curve(capsys):
    code, out, _ = run(capsys, "critical", "--gamma", "0", "--eta-max", "1")
    assert code == 0
    t2 = [float(r["value"]) for r in rows(out) if r["quantity"] == "t2"]
    assert len(t2) == 200
    assert abs(t2[0] - 1.13459) < 1e-4 and t2[-1] == 0.0
    assert all(b <= a for a, b in zip(t2, t2[1:]))
    assert all(r["T"] == "" for r in rows(out))


def test_critical_absent_value_is_blank(capsys):
    _, out, _ = run(capsys, "critical", "--gamma", "0", "--eta-min", "1.5", "--eta-max", "2",
                    "--steps", "3")
    t2 = [r["value"] for r in rows(out) if r["quantity"] == "t2"]
    assert t2 == ["", "", ""]


def test_sweep_deterministic_across_threads(capsys, monkeypatch, tmp_path):
    argv = ["sweep", "--var", "eta", "--start", "0", "--stop", "2", "--steps", "50",
            "--gamma", "0.4", "--temp", "0.5", "--quantities", "concurrence,fef,t2,partial_fidelity"]
    assert cli.run(argv + ["--output", str(tmp_path / "a.csv")]) == 0
    assert cli.run(argv + ["--output", str(tmp_path / "b.csv")]) == 0
    monkeypatch.setenv(cli.THREADS_ENV, "4")
    assert cli.run(argv + ["--output", str(tmp_path / "c.csv")]) == 0
    a, b, c = ((tmp_path / f"{x}.csv").read_bytes() for x in "abc")
    assert a == b == c
    header = a.decode().splitlines()[0]
    assert header == "gamma,eta,J,T,quantity,value,xi"


def test_sweep_temperature(capsys):
    code, out, _ = run(capsys, "sweep", "--var", "T", "--start", "0.1", "--stop", "3",
                       "--steps", "5", "--quantities", "concurrence")
    vals = [float(r["value"]) for r in rows(out)]
    assert code == 0 and vals[0] > vals[-1] == 0.0


def test_sweep_xi(capsys):
    code, out, _ = run(capsys, "sweep", "--var", "xi", "--start", "0", "--stop", str(math.pi / 4),
                       "--steps", "3", "--temp", "0.5", "--quantities", "partial_fidelity")
    assert code == 0 and len(rows(out)) == 3


@pytest.mark.parametrize("argv", [
    ["sweep", "--var", "T", "--start", "0.1", "--stop", "1", "--quantities", "t1"],
    ["sweep", "--var", "eta", "--start", "1", "--stop", "0", "--temp", "1"],
    ["sweep", "--var", "eta", "--start", "0", "--stop", "1", "--steps", "1", "--temp", "1"],
    ["sweep", "--var", "eta", "--start", "0", "--stop", "1", "--temp", "1", "--quantities", "bogus"],
    ["sweep", "--var", "xi", "--start", "0", "--stop", "1", "--temp", "1", "--quantities", "fef"],
    ["eval", "--gamma", "1.5", "--temp", "1"],
    ["eval", "--temp", "0"],
    ["eval"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and "error" in err


@pytest.mark.parametrize("argv", [["frobnicate"], ["eval", "--temp", "1", "--beta", "1"],
                                  ["mc-fidelity", "--temp", "1", "--m", "7"]])
def test_parser_errors_exit_one(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        cli.run(argv)
    assert exc.value.code == 1


def test_bad_thread_env(capsys, monkeypatch):
    monkeypatch.setenv(cli.THREADS_ENV, "lots")
    code, _, _ = run(capsys, "critical", "--steps", "2")
    assert code == 1


def test_nonconvergence_exit_code(capsys, monkeypatch):
    from xychain import criticality
    stuck = criticality.CriticalResult(None, (1e-3, 2e6), False)
    monkeypatch.setattr(criticality, "t1_critical", lambda *a: stuck)
    code, _, err = run(capsys, "critical", "--gamma", "0.5", "--steps", "2")
    assert code == 3 and "numerical" in err


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--grid", "100", "--seed", "7", "--mc-samples", "100000",
                       "--mc-points", "2")
    assert code == 0 and "all checks passed" in out
    assert out.count("[PASS]") == 6


def test_verify_failure_exit_code(capsys, monkeypatch):
    from xychain.verify import Check
    monkeypatch.setattr(cli, "run_all", lambda **kw: [Check("always", 1.0, 0.5)])
    code, out, _ = run(capsys, "verify")
    assert code == 2 and "[FAIL]" in out


def test_mc_fidelity(capsys, monkeypatch):
    argv = ["mc-fidelity", "--beta", "1", "--samples", "20000", "--seed", "3"]
    code, first, _ = run(capsys, *argv)
    monkeypatch.setenv(cli.THREADS_ENV, "3")
    _, second, _ = run(capsys, *argv)
    assert code == 0 and first == second
    recs = rows(first)
    assert recs[0]["quantity"] == "ent_fidelity_mc(m=2,n=2)" and float(recs[0]["stderr"]) > 0
    assert abs(float(recs[0]["value"]) - float(recs[1]["value"])) < 4 * float(recs[0]["stderr"])


def test_huge_field_exceeds_bracket(capsys):
    code, _, err = run(capsys, "critical", "--gamma", "0.5", "--eta-min", "1e7", "--eta-max", "2e7",
                       "--steps", "2")
    assert code == 3 and "bracket" in err
