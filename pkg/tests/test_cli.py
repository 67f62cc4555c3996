import json

import pytest

from bei.cli import main
from bei.constructors import paper_corpus
from bei.io import fixture_path


def fx(name):
    return str(fixture_path(name))


def test_analyze_basic(capsys):
    code = main(["analyze", fx("fig3.edges"), "--props", "accessible,su"])
    out = capsys.readouterr().out
    assert code == 0
    assert "accessible: True" in out
    assert "strongly_unmixed: True" in out


def test_analyze_json_witness(capsys):
    code = main(["analyze", fx("fig2a_L.edges"), "--props", "unmixed", "--json"])
    assert code == 0  # a negative verdict is not a violation
    d = json.loads(capsys.readouterr().out)
    assert d["verdicts"]["unmixed"]["value"] is False
    assert d["verdicts"]["unmixed"]["witness"] == [1, 3, 4, 6, 10]


def test_analyze_graph6_input(tmp_path, capsys):
    p = tmp_path / "k2.g6"
    p.write_text("A_\n")
    assert main(["analyze", str(p), "--format", "graph6"]) == 0
    assert "n=2 m=1" in capsys.readouterr().out


def test_decompose(capsys):
    assert main(["decompose", fx("fig3.edges"), "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["unmixed"] is True and len(d["components"]) == 17
    assert {c["height"] for c in d["components"]} == {9}


def test_blocks(capsys):
    assert main(["blocks", fx("fig5.edges")]) == 0
    out = capsys.readouterr().out
    assert "cut vertices: [2, 5, 10, 13, 17, 18, 19, 20]" in out


def test_construct_round_trip(tmp_path, capsys):
    assert main(["construct", "star", "3", "3", "3", "--whiskered"]) == 0
    text = capsys.readouterr().out
    p = tmp_path / "g.edges"
    p.write_text(text)
    assert main(["analyze", str(p), "--props", "su"]) == 0
    assert "strongly_unmixed: True" in capsys.readouterr().out


def test_construct_unknown_corpus(capsys):
    assert main(["construct", "corpus", "nope"]) == 2


def test_usage_errors(capsys, tmp_path):
    assert main(["analyze", str(tmp_path / "missing.edges")]) == 2
    bad = tmp_path / "bad.edges"
    bad.write_text("1 1\n")
    assert main(["analyze", str(bad)]) == 2
    assert main(["frobnicate"]) == 2


def test_search_conjecture_exit(capsys):
    assert main(["search", "conjecture", "--max-n", "4"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["candidates"] == [] and d["examined"] == 10


def test_verify_gluing(capsys):
    assert main(["verify", "gluing"]) == 0
    captured = capsys.readouterr()
    d = json.loads(captured.out)
    assert d["passed"] is True and len(d["skips"]) == 1
    assert "skipped" in captured.err


def test_budget_exit(monkeypatch, capsys):
    from bei.cutsets import clear_caches
    from bei.properties import clear_memo
    clear_memo(), clear_caches()
    monkeypatch.setenv("BEI_BUDGET_SECS", "0.0")
    assert main(["analyze", fx("fig5.edges"), "--props", "su"]) == 3
    monkeypatch.delenv("BEI_BUDGET_SECS")
    clear_memo(), clear_caches()
