import json
import subprocess
import sys

import pytest

from confpart.cli import EXIT_CEILING, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main


def run(capsys, *args):
    code = main(["--no-timing", *args])
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


def test_partition_rows(capsys):
    code, rec = run(capsys, "partition", "--n", "2", "--m", "2", "--method", "gauss")
    assert code == EXIT_OK and rec["result"]["row"] == ["1", "1", "2", "1", "1"]
    code, rec = run(capsys, "partition", "--n", "1", "--m", "1")
    assert rec["result"]["row"] == ["1", "1"]
    assert rec["schema"] == "confpart.cli/1" and "timing_s" not in rec


@pytest.mark.parametrize("method", ["dp", "oracle", "gauss", "toeplitz", "closed"])
def test_partition_methods_agree(capsys, method):
    code, rec = run(capsys, "partition", "--n", "3", "--m", "4", "--s", "6", "--method", method)
    assert code == EXIT_OK and rec["result"]["count"] == "5"


def test_closed_reports_regime(capsys):
    _, rec = run(capsys, "partition", "--n", "3", "--m", "9", "--s", "14", "--method", "closed")
    assert rec["result"]["regime"] in ("prop11", "prop12", "prop13", "small-s", "fallback-dp")


def test_big_counts_are_strings(capsys):
    _, rec = run(capsys, "partition", "--n", "40", "--m", "40", "--s", "800")
    value = rec["result"]["count"]
    assert isinstance(value, str) and int(value) > 2**53


def test_mu(capsys):
    _, rec = run(capsys, "mu", "--n", "4", "--m", "2", "--check")
    assert (rec["result"]["R"], rec["result"]["S"], rec["result"]["Q"]) == ("9", "6", "3")
    _, rec = run(capsys, "mu", "--n", "1", "--m", "5")
    assert (rec["result"]["R"], rec["result"]["S"]) == ("3", "3")
    code, rec = run(capsys, "mu", "--pairs", "2,1,2,1", "--check")
    assert code == EXIT_OK and (rec["result"]["R"], rec["result"]["S"]) == ("5", "4")


@pytest.mark.parametrize("x,n,lam", [("1,4", "2", 2.0), ("1,1,1", "3", 1.0), ("1,4,2,2", "4", 2.0)])
def test_roots(capsys, x, n, lam):
    code, rec = run(capsys, "roots", "--n", n, "--x", x, "--bounds")
    assert code == EXIT_OK
    assert rec["result"]["lambda"] == pytest.approx(lam, abs=1e-12)


def test_selfdual_pipeline(tmp_path, capsys):
    code, rec = run(capsys, "selfdual", "build", "--n", "2", "--m", "1", "--kind", "S",
                    "--coeff", "0,1=1", "--default", "0")
    a = tmp_path / "a.json"
    a.write_text(json.dumps(rec))
    code, rec = run(capsys, "selfdual", "multiply", "--file", str(a), "--other", str(a))
    assert code == EXIT_OK and rec["result"]["kind"] == "reciprocal"
    b = tmp_path / "b.json"
    b.write_text(json.dumps(rec))
    code, rec = run(capsys, "selfdual", "print", "--file", str(b))
    assert "lam^4" in rec["result"]["text"]
    code, rec = run(capsys, "selfdual", "dualcheck", "--file", str(b), "--x", "2,3", "--lam", "1.5")
    assert code == EXIT_OK and rec["result"]["ok"]


def test_selfdual_symbolic(capsys):
    _, rec = run(capsys, "selfdual", "build", "--n", "4", "--m", "2", "--kind", "R")
    assert rec["result"]["independent"] == "9"


def test_groups(capsys):
    _, rec = run(capsys, "groups", "I_{2,5}", "O_h")
    verdicts = {g["name"]: g["admits"] for g in rec["result"]["groups"]}
    assert verdicts == {"I_{2,5}": False, "O_h": True}


def test_csv(capsys):
    code = main(["--csv", "partition", "--n", "2", "--m", "2"])
    lines = capsys.readouterr().out.splitlines()
    assert code == EXIT_OK and lines[0] == "key,value" and lines[3] == "row[2],2"


def test_exit_codes(capsys, monkeypatch):
    assert main(["partition", "--n", "0", "--m", "1"]) == EXIT_USAGE
    assert main(["partition"]) == EXIT_USAGE
    assert main(["groups", "E_8"]) == EXIT_USAGE
    monkeypatch.setenv("CONFORMAL_ORACLE_CEILING", "10")
    assert main(["partition", "--n", "5", "--m", "5", "--s", "12", "--method", "oracle"]) == EXIT_CEILING
    capsys.readouterr()


def test_verify_failure_exit(capsys, monkeypatch):
    from confpart import verify

    monkeypatch.setitem(verify.RUNNERS, "groups",
                        lambda **kw: [verify.Check("groups", "forced", False, "boom")])
    code, rec = run(capsys, "verify", "--suite", "groups")
    assert code == EXIT_VERIFY and rec["result"]["failures"][0]["name"] == "forced"


def test_verify_suites(capsys):
    code, rec = run(capsys, "verify", "--suite", "partitions", "--max-n", "6", "--max-m", "6")
    assert code == EXIT_OK
    code, rec = run(capsys, "verify", "--suite", "closedforms", "--max-n", "8", "--max-m", "10")
    assert code == EXIT_OK
    code, rec = run(capsys, "verify", "--suite", "groups", "--verbose")
    assert code == EXIT_OK and any(c["name"] == "O_h" for c in rec["result"]["checks"])


def test_parallel_verify_is_identical():
    def out(jobs):
        return subprocess.run(
            [sys.executable, "-m", "confpart", "--no-timing", "verify", "--suite", "closedforms",
             "--max-n", "5", "--max-m", "6", "--verbose", "--jobs", str(jobs)],
            capture_output=True, text=True, check=True,
        ).stdout

    assert out(1) == out(3)
