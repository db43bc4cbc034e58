"""Acceptance suite: one pass/fail line per criterion at its stated band."""
import json
import subprocess
import sys

import pytest

from farey_neighbours import acceptance

CFG = acceptance.VerifyConfig()
# filled as criteria run; conftest prints them in the terminal summary
REPORT_LINES = []


@pytest.mark.parametrize("criterion", acceptance.CRITERIA, ids=lambda fn: fn.__name__)
def test_criterion(criterion):
    r = criterion(CFG)
    REPORT_LINES.extend(acceptance.report_lines([r]))
    assert r.passed, r.measured


def _verify(out, *extra):
    return subprocess.run([sys.executable, "-m", "farey_neighbours", "verify", "--out", str(out), *extra],
                          capture_output=True, text=True)


def test_verify_is_byte_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    ra, rb = _verify(a), _verify(b)
    print(ra.stdout)
    assert ra.returncode == 0 and rb.returncode == 0
    names = sorted(p.name for p in a.iterdir())
    assert names == sorted(p.name for p in b.iterdir())
    assert {"report.json", "arcs-19.svg", "counts-q.csv", "witness-f-5.json"} <= set(names)
    for n in names:
        assert (a / n).read_bytes() == (b / n).read_bytes(), n
    report = json.loads((a / "report.json").read_text())
    assert [c["passed"] for c in report["criteria"]] == [True] * len(acceptance.CRITERIA)
    notes = [n for c in report["criteria"] for n in c["notes"]]
    assert sum(n.startswith("adjudication") for n in notes) == 2


def test_verify_fails_on_corrupted_constant(tmp_path):
    r = _verify(tmp_path / "bad", "--inject-fault", "constant")
    print(r.stdout.splitlines()[-1])
    assert r.returncode == 1
    assert "[FAIL]" in r.stdout and "rational asymptotics" in r.stdout
