import json
import subprocess
import sys
from fractions import Fraction

import pytest

from bisectorc import geometry
from bisectorc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("q, code, degree", [
    ("1", 0, 1), ("1/2", 0, 2), ("2", 3, 3), ("3", 3, 3), ("11/28", 0, 1), ("symbolic", 3, 3),
])
def test_analyze_exit_codes(capsys, q, code, degree):
    rc, out, _ = run(capsys, "analyze", "--q", q, "--format", "json")
    assert rc == code
    doc = json.loads(out)
    assert doc["verdict"]["degree"] == degree


def test_analyze_text(capsys):
    rc, out, _ = run(capsys, "analyze", "--q", "11/28")
    assert rc == 0
    assert "decision: Constructible" in out
    assert "t = l/b = 4/7" in out
    rc, out, _ = run(capsys, "analyze", "--q", "symbolic")
    assert rc == 3
    for tag in ("gauss_primitivity", "g_divides_constant", "h_divides_leading",
                "degree_argument", "constant_case"):
        assert tag in out


@pytest.mark.parametrize("q", ["0", "-1", "abc", "1/0"])
def test_analyze_bad_q(capsys, q):
    rc, _, err = run(capsys, "analyze", "--q", q)
    assert rc == 2
    assert "error" in err


def test_usage_errors_exit_2():
    assert subprocess.run([sys.executable, "-m", "bisectorc", "analyze"],
                          capture_output=True).returncode == 2
    assert subprocess.run([sys.executable, "-m", "bisectorc", "analyze", "--q", "1", "--eps", "0"],
                          capture_output=True).returncode == 2


def test_solve(capsys):
    rc, out, _ = run(capsys, "solve", "--q", "2", "--format", "json")
    assert rc == 0
    doc = json.loads(out)
    assert doc["verified"] is True
    assert doc["t"]["decimal"].startswith("2.2145040377")
    assert Fraction(doc["p_deviation_bound"]) <= Fraction(1, 10 ** 10)
    rc, out, _ = run(capsys, "solve", "--q", "1")
    assert rc == 0 and "exact 1" in out and "exact p^2 from (q, t): 1" in out
    assert run(capsys, "solve", "--q", "symbolic")[0] == 2


def test_derive_deterministic(capsys):
    rc1, out1, _ = run(capsys, "derive", "--format", "json")
    rc2, out2, _ = run(capsys, "derive", "--format", "json")
    assert rc1 == rc2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert len(doc) == 6
    assert all(set(d) == {"step", "lhs", "rhs", "verified"} and d["verified"] for d in doc)


def test_derive_mutation_exit_1(capsys, monkeypatch):
    monkeypatch.setattr(geometry, "_p_sq_closed",
                        lambda l, b: b * b * l * (b - 2 * l) / ((b + l) * (b + l)))
    rc, out, _ = run(capsys, "derive")
    assert rc == 1
    assert "FAIL" in out


def test_selftest_mutation_reports_instance(capsys, monkeypatch):
    def wrong(l, b):
        cos_theta = b / (2 * l)
        x = b * l / (b + l)
        return b * b + x * x + 2 * b * x * cos_theta

    monkeypatch.setattr(geometry, "_p_sq_cosine_law", wrong)
    rc, out, _ = run(capsys, "selftest", "--format", "json")
    assert rc == 1
    forward = json.loads(out)["suites"][0]
    assert not forward["ok"]
    assert {"l", "b"} <= set(forward["failure"])


def test_scan(capsys):
    rc, out, _ = run(capsys, "scan")
    assert rc == 0
    rows = out.strip().splitlines()
    assert rows[0] == "s,q,t,degree"
    assert len(rows) == 6
    assert rows[2] == "1/2,11/28,4/7,1"
    assert all(r.endswith(",1") for r in rows[1:])
    rc, out, _ = run(capsys, "scan", "--range", "0:1", "--step", "1/2", "--format", "json")
    assert rc == 0
    assert json.loads(out) == [
        {"s": "1/2", "q": "11/28", "t": "4/7", "degree": 1},
        {"s": "1/1", "q": "1/1", "t": "1/1", "degree": 1},
    ]


@pytest.mark.parametrize("rng", ["0:3/2", "1:1", "x", "-1:1"])
def test_scan_bad_range(capsys, rng):
    assert run(capsys, "scan", f"--range={rng}")[0] == 2


def test_selftest_seed_determinism(capsys):
    rc1, out1, _ = run(capsys, "selftest", "--seed", "5", "--format", "json")
    rc2, out2, _ = run(capsys, "selftest", "--seed", "5", "--format", "json")
    assert rc1 == rc2 == 0 and out1 == out2
    doc = json.loads(out1)
    assert [s["total"] for s in doc["suites"]] == [1000, 700, 200, 1]


def test_env_format_and_out(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("BISECTORC_FORMAT", "json")
    target = tmp_path / "v.json"
    rc, out, _ = run(capsys, "analyze", "--q", "3", "--out", str(target))
    assert rc == 3 and out == ""
    assert json.loads(target.read_text())["verdict"]["decision"] == "NotConstructible"
