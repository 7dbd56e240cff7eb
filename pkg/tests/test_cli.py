import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from dpftypes import cli
from dpftypes.cli import HEADER, ClassificationRecord, from_csv, from_json, main, to_csv, to_json
from dpftypes.errors import RecognitionFailed


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_classify_p3():
    code, text = run("classify", "--p", "3", "--d", "2", "--format", "json")
    rec = json.loads(text)
    assert code == 0
    assert rec["type"] in {"α", "β", "γ"}
    assert (rec["disc"], rec["conductor"], rec["h_L"]) == (-108, 6, 1)
    assert list(rec) == list(HEADER)


def test_classify_p7_splitting_report():
    code, text = run("classify", "--p", "7", "--d", "2", "--format", "json")
    rec = json.loads(text)
    assert code == 0 and rec["theorem1"] is True
    notes = rec["notes"].split(";")
    assert "SPLIT:2:e1f3g2:septic_two_split" in notes
    assert "H_DIVISIBILITY_UNVERIFIED" in notes
    assert rec["U"] is None and rec["type"] is None


def test_degenerate_exit_code():
    assert run("classify", "--p", "3", "--d", "8")[0] == 2
    assert run("classify", "--p", "5", "--d", "32")[0] == 2


def test_failure_exit_code(monkeypatch):
    import dpftypes.dpf_classifier as dc

    def boom(F):
        raise RecognitionFailed("forced")

    monkeypatch.setattr(dc, "classify_field", boom)
    code, text = run("classify", "--p", "3", "--d", "5", "--format", "json")
    rec = json.loads(text)
    assert code == 3
    assert "RECOGNITION_FAILED" in rec["notes"].split(";")
    assert rec["h_L"] == 1 and rec["U"] is None  # partial record


def test_scan_csv_admissible():
    code, text = run("scan", "--p", "3", "--dmin", "2", "--dmax", "50", "--format", "csv")
    recs = from_csv(text)
    assert code == 0
    assert text.splitlines()[0] == ",".join(HEADER)
    assert len(recs) >= 40
    assert [r.d for r in recs] == sorted(r.d for r in recs)
    assert all(r.type in {"α", "β", "γ"} for r in recs)
    nc = [r for r in recs if "NON_CANONICAL" in r.notes]
    assert any(r.d == 18 and "NON_CANONICAL:12" in r.notes for r in nc)


def test_scan_single_and_p7():
    _, text = run("scan", "--p", "3", "--dmin", "2", "--dmax", "2", "--format", "json")
    assert [r.d for r in from_json(text)] == [2]
    _, text = run("scan", "--p", "7", "--dmin", "2", "--dmax", "200", "--format", "json")
    recs = from_json(text)
    assert sum(r.theorem1 for r in recs) == 16


def test_scan_deterministic_across_jobs():
    a = run("scan", "--p", "3", "--dmin", "2", "--dmax", "20", "--format", "csv", "--jobs", "1")[1]
    b = run("scan", "--p", "3", "--dmin", "2", "--dmax", "20", "--format", "csv", "--jobs", "3")[1]
    c = run("scan", "--p", "3", "--dmin", "2", "--dmax", "20", "--format", "csv")[1]
    assert a == b == c


def test_theorem1():
    code, text = run("theorem1", "--limit", "200")
    lines = text.splitlines()
    assert code == 0 and lines[1] == "MATCH 16 primes"
    assert lines[0].split() == "2 11 23 37 53 67 79 107 109 137 149 151 163 179 191 193".split()
    assert run("theorem1", "--limit", "3")[1].strip() == "2"


def test_lattice():
    _, text = run("lattice", "--p", "7", "--format", "json")
    assert len(json.loads(text)) == 10
    _, text = run("lattice", "--p", "5")
    assert "δ/ζ" in text and "ε/η" in text
    _, text = run("lattice", "--p", "3", "--format", "csv")
    assert len(text.strip().splitlines()) == 4


opt_int = st.one_of(st.none(), st.integers(-10**6, 10**6))
records = st.builds(
    ClassificationRecord,
    d=st.integers(2, 10**6),
    p=st.sampled_from([3, 5, 7]),
    a=opt_int,
    b=opt_int,
    species=st.sampled_from([None, "I", "II"]),
    disc=opt_int,
    conductor=opt_int,
    h_L=opt_int,
    three_rank=opt_int,
    U=opt_int,
    P=opt_int,
    A=opt_int,
    R=opt_int,
    type=st.sampled_from([None, "α", "β", "γ", "δ/ζ"]),
    theorem1=st.booleans(),
    # notes are machine strings; include the characters that force RFC-4180 quoting
    notes=st.text(alphabet=st.characters(blacklist_categories=("Cs", "Cc")) | st.sampled_from(',";\n'), max_size=30),
)


@given(st.lists(records, max_size=4))
def test_round_trip(recs):
    assert from_json(to_json(recs)) == recs
    # csv cannot tell an empty string from a missing value; notes is always a string
    assert from_csv(to_csv(recs)) == recs


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "dpftypes", "theorem1", "--limit", "200"], capture_output=True, text=True
    )
    assert out.returncode == 0 and "MATCH" in out.stdout
    out = subprocess.run([sys.executable, "-m", "dpftypes", "classify", "--d", "27"], capture_output=True, text=True)
    assert out.returncode == 2
