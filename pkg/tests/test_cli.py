import json

import pytest

from farey_neighbours.cli import main, witness_document


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count_rational(capsys):
    code, out, _ = run(capsys, "count", "--regime", "q", "--grid", "10")
    assert code == 0
    assert out.splitlines()[0] == "threshold,empirical,model_paper,model_alt,ratio_paper,ratio_alt"
    assert out.splitlines()[1].split(",")[:2] == ["10", "23"]


def test_count_to_file_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for p in (a, b):
        assert run(capsys, "count", "--regime", "field", "--f", "-2", "--grid", "1,1/2,1/4",
                   "--out", str(p))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_count_errors(capsys):
    code, _, err = run(capsys, "count", "--grid", "10,5")
    assert code == 2 and "monotone" in err


@pytest.mark.parametrize("f, n", [(-5, 2), (-1, 1), (-23, 3)])
def test_witness_counts(f, n):
    doc = witness_document(f)
    assert doc["version"] == 1 and doc["class_number"] == n
    assert len(doc["witnesses"]) == n


def test_witness_principal_pair(capsys):
    code, out, _ = run(capsys, "witness", "--f", "-1")
    doc = json.loads(out)
    w = doc["witnesses"][0]["witness"]
    assert w["alpha"] == [["1", "0"], ["0", "0"]] and w["beta"][0] == ["0", "0"]


def test_witness_unsupported(capsys):
    code, _, err = run(capsys, "witness", "--f", "-101")
    assert code == 2 and "outside" in err


def test_plot_arcs(tmp_path, capsys):
    out = tmp_path / "arcs.svg"
    assert run(capsys, "plot-arcs", "--max-denom", "1", "--out", str(out))[0] == 0
    assert out.read_text().count("<path") == 1
