import json
import subprocess
import sys

import pytest

from doubleflag.cli import (
    FIELDS,
    OrbitRecord,
    main,
    records_from_csv,
    records_to_csv,
)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_count_text(capsys):
    code, out = run(capsys, "count", "--n", "2")
    assert code == 0
    lines = dict(line.split() for line in out.splitlines())
    assert lines["AIII"] == "16" and lines["SYD"] == "10" and lines["SYD_CI"] == "8"


@pytest.mark.parametrize("n, aiii", [(1, 3), (4, 1038)])
def test_count_json(capsys, n, aiii):
    code, out = run(capsys, "count", "--n", str(n), "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["aiii"] == doc["aiii_enumerated"] == aiii


def test_orbits_n1(capsys):
    code, out = run(capsys, "orbits", "--n", "1", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["n"] == 1 and doc["seed"] == 0
    assert len(doc["records"]) == 3
    assert all(r["phi_theta"] == [[1], [1]] for r in doc["records"])
    assert all(set(r) == set(FIELDS) for r in doc["records"])
    assert not any(r["flagged"] for r in doc["records"])


def test_orbits_ci_filter(capsys):
    _, full = run(capsys, "orbits", "--n", "2")
    _, ci = run(capsys, "orbits", "--n", "2", "--ci")
    full, ci = json.loads(full)["records"], json.loads(ci)["records"]
    assert len(full) == 16
    assert ci == [r for r in full if r["ci"]]
    assert 0 < len(ci) < 16


def test_orbits_sorted_and_deterministic(capsys):
    _, a = run(capsys, "orbits", "--n", "3", "--seed", "7")
    _, b = run(capsys, "orbits", "--n", "3", "--seed", "7")
    assert a == b
    recs = json.loads(a)["records"]
    keys = [(r["rpq"], [int(v) for v in r["tau1"].split(",")], [int(v) for v in r["tau2"].split(",")]) for r in recs]
    assert keys == sorted(keys)


def test_csv_json_round_trip(capsys, tmp_path):
    out = tmp_path / "o.csv"
    assert main(["orbits", "--n", "2", "--format", "csv", "--out", str(out)]) == 0
    _, js = run(capsys, "orbits", "--n", "2")
    text = out.read_text()
    assert text.splitlines()[0] == ",".join(FIELDS)
    from_csv = records_from_csv(text)
    from_json = [OrbitRecord(**r) for r in json.loads(js)["records"]]
    assert from_csv == from_json
    assert records_to_csv(from_csv) == text


def test_check_suites(capsys):
    code, out = run(capsys, "check", "--n", "2", "--suite", "counts")
    assert code == 0 and "PASS" in out
    code, out = run(capsys, "check", "--n", "3", "--suite", "conjecture", "--seed", "7", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and doc["suites"]["conjecture"]["passed"] == 36
    code, _ = run(capsys, "check", "--n", "2", "--suite", "all")
    assert code == 0


def test_check_failure_exit_code(capsys, monkeypatch):
    import doubleflag.cli as cli

    monkeypatch.setitem(cli.SUITES, "counts", lambda n, **_: {"passed": False})
    code, out = run(capsys, "check", "--n", "2", "--suite", "counts")
    assert code == 1 and "FAIL" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--n", "9"],
        ["count", "--n", "0"],
        ["orbits", "--n", "2", "--format", "xml"],
        ["check", "--n", "2", "--suite", "nope"],
        ["orbits", "--n", "2", "--trials", "0"],
        ["frobnicate"],
    ],
)
def test_usage_errors(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "doubleflag", "count", "--n", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "AIII     3" in proc.stdout
