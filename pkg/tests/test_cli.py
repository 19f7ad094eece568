import io
import json

import pytest

from conftest import A4, CASE1, CASE2, S3, make_spec
from frobaut.autstruct import analyze
from frobaut.cli import main
from frobaut.report import flatten, parse, render, strip_volatile


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_analyze_json(spec_file):
    code, text = run(["analyze", spec_file(CASE2)])
    assert code == 0
    doc = json.loads(text)
    assert doc["structure"] == "C_31^4 : ((GL(1,31)^4) . [C2 x C2])"
    assert doc["normalizer_order"] == "3240000"
    assert doc["stabilizer"]["invariants"] == [2, 2]


def test_analyze_s3(spec_file):
    code, text = run(["analyze", spec_file(S3), "--json"])
    assert code == 0 and json.loads(text)["aut_order"] == "6"


def test_analyze_text_agrees_with_json(spec_file):
    path = spec_file(CASE2)
    _, js = run(["analyze", path])
    _, tx = run(["analyze", path, "--text"])
    assert tx.startswith("Aut(G) = C_31^4 : ")
    lines = dict(line.split(": ", 1) for line in tx.splitlines()[3:])
    for key, value in flatten(json.loads(js)):
        if key == "timestamp":
            continue
        if isinstance(value, (int, str)) and not isinstance(value, bool):
            assert lines[key] == str(value), key


@pytest.mark.parametrize("doc, fragment", [
    ({"n": 15, "components": [{"p": 31, "constituents": [{"r": 3, "e": 1}]}]}, "Frobenius condition"),
    ({"n": 15, "components": [{"p": 5, "constituents": [{"r": 1, "e": 1}]}]}, "p divides n"),
    ({"n": 15, "components": [{"p": 33, "constituents": [{"r": 1, "e": 1}]}]}, "not prime"),
    ({"n": 1, "components": [{"p": 3, "constituents": [{"r": 0, "e": 1}]}]}, "nontrivial"),
    ({"n": "15", "components": []}, "integer"),
    ("{not json", "malformed JSON"),
])
def test_analyze_rejects(spec_file, capsys, doc, fragment):
    code, text = run(["analyze", spec_file(doc)])
    assert code == 2 and text == ""
    assert fragment in capsys.readouterr().err


def test_missing_file(capsys, tmp_path):
    assert run(["analyze", str(tmp_path / "nope.json")])[0] == 2
    assert "cannot read" in capsys.readouterr().err


def test_verify_matches(spec_file):
    code, text = run(["verify", spec_file(A4), "--oracle", "both"])
    doc = json.loads(text)
    assert code == 0 and doc["all_match"]
    assert doc["verify"]["aut"]["oracle"] == "24"
    assert doc["verify"]["normalizer"]["oracle"] == doc["normalizer_order"]


def test_verify_too_large(spec_file, capsys):
    assert run(["verify", spec_file(CASE1), "--oracle", "normalizer"])[0] == 3
    assert "too large" in capsys.readouterr().err


def test_verify_mismatch_exit(spec_file, monkeypatch):
    import frobaut.oracle as oracle
    monkeypatch.setattr(oracle, "count_normalizer_bruteforce", lambda *a, **k: -1)
    assert run(["verify", spec_file(S3), "--oracle", "normalizer"])[0] == 1


def test_seed_free_passes_and_traps(spec_file, monkeypatch):
    assert run(["--seed-free", "verify", spec_file(S3)])[0] == 0
    import random

    import frobaut.oracle as oracle
    monkeypatch.setattr(oracle, "find_generating_set", lambda g: [random.randrange(g.order)])
    assert run(["--seed-free", "verify", spec_file(S3), "--oracle", "aut"])[0] == 4


def test_sweep_json_lines():
    code, text = run(["sweep", "--p", "2", "--n", "3,7", "--max-d", "6", "--json"])
    assert code == 0
    docs = [json.loads(line) for line in text.splitlines()]
    ns = sorted({d["spec"]["n"] for d in docs})
    assert ns == [3, 7]
    assert all(int(d["aut_order"]) == int(d["kernel_order"]) * int(d["normalizer_order"]) for d in docs)


def test_sweep_text_and_skip(caplog):
    code, text = run(["sweep", "--p", "2", "--n", "2,3", "--max-d", "2"])
    assert code == 0
    assert text.splitlines() == ["n=3 p=2 [1^1] |Aut|=24 C_2^2 : GammaL(1,4)"]


@pytest.mark.parametrize("spec", [CASE2, S3, make_spec(12, (5, [(1, 1), (7, 1)]), (7, [(1, 2)]))])
def test_report_round_trip(spec):
    report = analyze(spec)
    doc = render(report, timestamp="T")
    assert parse(doc) == report
    assert strip_volatile(render(parse(json.loads(json.dumps(doc))))) == strip_volatile(doc)


def test_sweep_specs_counts_and_dedup(caplog):
    from frobaut.sweep import sweep_specs
    assert len(list(sweep_specs(2, [3], 4))) == 2      # e = 1 and e = 2 on the single class
    assert len(list(sweep_specs(31, [15], 1))) == 1    # all d = 1 classes are unit-scalings of each other
    assert list(sweep_specs(2, [2], 4)) == []
    assert "skip" in caplog.text.lower()
