import json

import pytest

from divbounds.cli import OutputRecord, main


@pytest.fixture
def files(tmp_path):
    p = tmp_path / "p.txt"
    p.write_text("0.5\n0.5\n")
    q = tmp_path / "q.json"
    q.write_text("[0.25, 0.75]")
    return str(p), str(q)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out) if out else None, err


def test_compute(files, capsys):
    code, rec, _ = run_json(capsys, "compute", "--p", files[0], "--q", files[1], "--measure", "kl,delta,phi:2")
    assert code == 0
    assert rec["results"] == {"kl": 0.143841036226, "delta": 0.133333333333, "phi:2": 0.166666666667}


def test_compute_same_distribution(files, capsys):
    code, rec, _ = run_json(capsys, "compute", "--p", files[0], "--q", files[0], "--measure", "kl,j,m-an2")
    assert code == 0 and all(abs(v) <= 1e-15 for v in rec["results"].values())


def test_compute_unknown_measure(files, capsys):
    code, _, err = run(capsys, "compute", "--p", files[0], "--q", files[1], "--measure", "bogus")
    assert code == 1 and "available" in err and "hellinger" in err


def test_compute_bad_file(tmp_path, files, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("0.5\n0.7\n")
    assert run(capsys, "compute", "--p", str(bad), "--q", files[1], "--measure", "kl")[0] == 1
    assert run(capsys, "compute", "--p", str(bad), "--q", files[1], "--measure", "kl", "--normalize")[0] == 0
    assert run(capsys, "compute", "--p", str(tmp_path / "missing"), "--q", files[1], "--measure", "kl")[0] == 1


def test_bounds(files, capsys):
    code, rec, _ = run_json(capsys, "bounds", "--p", files[0], "--q", files[1], "--generator", "phi:1")
    assert code == 0
    r = rec["results"]
    assert (r["c"], r["e"], r["a"], r["b"]) == (0.143841036226, 0.274653072167, 0.366204096223, 0.143841036226)
    assert all(rec["flags"].values())


def test_bounds_diagonal_and_fs(files, capsys):
    code, rec, _ = run_json(capsys, "bounds", "--p", files[1], "--q", files[1], "--generator", "ah")
    assert code == 0 and {rec["results"][k] for k in "ceab"} == {0.0}
    code, rec, _ = run_json(capsys, "bounds", "--p", files[0], "--q", files[1], "--generator", "fs:0.5")
    assert code == 0 and all(rec["flags"].values())
    assert rec["results"]["c"] == 0.0681483474219


def test_bounds_bad_generator(files, capsys):
    assert run(capsys, "bounds", "--p", files[0], "--q", files[1], "--generator", "fs:2")[0] == 1
    assert run(capsys, "bounds", "--p", files[0], "--q", files[1], "--generator", "xyz")[0] == 1


def test_verify_ratio_sup(capsys):
    code, rec, _ = run_json(capsys, "verify", "--suite", "ratio-sup")
    assert code == 0
    betas = [v for k, v in rec["results"].items() if k.endswith(": beta")]
    assert betas == [8.0, 0.333333333333, 0.75, 4.0]


def test_verify_failure_exit_code(capsys):
    code, _, err = run(capsys, "verify", "--suite", "mean-chain", "--trials", "50", "--negative-control")
    assert code == 2 and "violation" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--suite", "mean-chain", "--trials", "0"],
        ["verify", "--suite", "mean-chain", "--n-min", "1"],
        ["verify", "--suite", "bogus"],
        ["verify", "--suite", "mean-chain", "--trials", "ten"],
        ["means", "0", "2"],
        ["means", "1"],
        [],
    ],
)
def test_argument_errors_exit_1(argv, capsys):
    assert main(argv) == 1


def test_means(capsys):
    code, rec, _ = run_json(capsys, "means", "1", "4")
    assert code == 0
    r = rec["results"]
    assert [r[k] for k in ("H", "G", "N1", "N2", "A")] == [1.6, 2.0, 2.25, 2.37170824513, 2.5]
    assert rec["flags"]["H<=G<=N1<=N2<=A"]
    code, rec, _ = run_json(capsys, "means", "3", "3")
    assert set(rec["results"].values()) == {3.0}
    code, rec, _ = run_json(capsys, "means", "1e-3", "1e3")
    assert code == 0 and all(rec["flags"].values()) and rec["results"]["D_inf"] == 1000.0


def test_table_output(files, capsys):
    code, out, _ = run(capsys, "compute", "--p", files[0], "--q", files[1], "--measure", "kl")
    assert code == 0 and "0.143841036226" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["means", "1", "4"],
        ["verify", "--suite", "identities", "--trials", "20"],
    ],
)
def test_json_round_trip(argv, capsys):
    main(argv + ["--format", "json"])
    out = capsys.readouterr().out.strip()
    assert OutputRecord.from_dict(json.loads(out)).to_json() == out


def test_json_round_trip_compute(files, capsys):
    main(["compute", "--p", files[0], "--q", files[1], "--measure", "kl,t,i,phi:-2", "--format", "json"])
    out = capsys.readouterr().out.strip()
    assert OutputRecord.from_dict(json.loads(out)).to_json() == out
