from __future__ import annotations

import io
import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ulrich_chern.bundles import bundle_to_json
from ulrich_chern.cli import parse_class, parse_ring, run
from ulrich_chern.ring import MultiProjective, Quadric, hyperplane
from ulrich_chern.spinor import ulrich_spinor

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_CASES = {
    "verify_table1.json": ["verify", "table1", "--format", "json"],
    "spinor_chern_q10.json": ["spinor", "chern", "--n", "10", "--kind", "sprime", "--json"],
    "spinor_nu_table.json": ["spinor", "nu-table", "--format", "json"],
    "quadric_classify_q4.md": ["quadric", "classify", "--n", "4"],
    "quadric_classify_q6.json": ["quadric", "classify", "--n", "6", "--rmax", "16", "--format", "json"],
    "verify_thm4.json": ["verify", "thm4", "--format", "json"],
    "verify_example_un_3_2.md": ["verify", "example-un", "--n", "3", "--r", "2"],
}


def _run(argv, capsys, stdin: str | None = None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_golden_outputs(name, capsys):
    code, out, _ = _run(GOLDEN_CASES[name], capsys)
    assert code == 0
    assert out == (GOLDEN / name).read_text()
    # a second run is byte-identical
    assert _run(GOLDEN_CASES[name], capsys)[1] == out


def test_verify_table1_rmax8(capsys):
    code, out, _ = _run(["verify", "table1", "--rmax", "8", "--format", "json"], capsys)
    assert code == 0
    rep = json.loads(out)
    ids = [c["id"] for c in rep["checks"]]
    assert ids == [f"Q{n}" for n in range(2, 13)]
    assert {c["id"]: c["computed"] for c in rep["checks"]}["Q12"] == []


def test_spinor_chern_q10_json(capsys):
    code, out, _ = _run(["spinor", "chern", "--n", "10", "--kind", "sprime", "--json"], capsys)
    data = json.loads(out)
    assert code == 0
    assert data["chern"]["c1"] == {"b1": -8} and data["chern"]["c9"] == {"b9": -176}
    assert sorted(data["chern"]["c5"].values()) == [-244, -220]
    assert data["chern"]["c10"] == {}


def test_quadric_nu(capsys):
    assert _run(["quadric", "nu", "--n", "4", "--a", "1", "--b", "1"], capsys)[:2] == (0, "6\n")


def test_rmax_default_is_twice_the_spinor_rank(capsys):
    code, out, _ = _run(["quadric", "classify", "--n", "6", "--format", "json"], capsys)
    assert json.loads(out)["rmax"] == 8


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "chern-q10"],
        ["verify", "nu-table"],
        ["verify", "thm4", "--rmax", "3"],
        ["verify", "example-un", "--n", "4", "--r", "5"],
        ["verify", "theorem2-cases"],
        ["verify", "line-criterion"],
        ["spinor", "identities"],
        ["spinor", "identities", "--n", "10", "--format", "json"],
        ["quadric", "classify", "--n", "10", "--rmax", "16", "--verify", "table1"],
        ["ring", "eval", "--ring", "Q10", "b5*bp5", "--integrate"],
    ],
)
def test_suites_pass(argv, capsys):
    assert _run(argv, capsys)[0] == 0


def test_ring_eval(capsys):
    code, out, _ = _run(["ring", "eval", "--ring", "P2xP2", "(t1+t2)^4", "--integrate", "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["degree"] == 6
    code, out, _ = _run(["ring", "eval", "--ring", '{"type": "quadric", "n": 4}', "h**2 - b2"], capsys)
    assert code == 0 and out.strip() == "Q4: bp2"


def test_bundle_ops(capsys, monkeypatch, tmp_path):
    E = ulrich_spinor(4, "sprime")
    text = json.dumps(bundle_to_json(E))
    assert _run(["bundle", "nu"], capsys, text, monkeypatch)[:2] == (0, "3\n")
    code, out, _ = _run(["bundle", "is-big", "--format", "json"], capsys, text, monkeypatch)
    assert json.loads(out) == {"big": False, "witness": 0}
    code, out, _ = _run(["bundle", "segre-dual", "--i", "4", "--format", "json"], capsys, text, monkeypatch)
    assert json.loads(out)["degree"] == 0
    code, out, _ = _run(["bundle", "twist", "--by=-h", "--format", "json"], capsys, text, monkeypatch)
    assert json.loads(out)["chern"] == {"b0": 1, "b1": -1, "b2": 1}
    other = tmp_path / "other.json"
    other.write_text(json.dumps(bundle_to_json(ulrich_spinor(4, "sdoubleprime"))))
    path = tmp_path / "e.json"
    path.write_text(text)
    code, out, _ = _run(["bundle", "sum", "--input", str(path), "--other", str(other), "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["rank"] == 4
    for op in ("dual", "segre", "show"):
        assert _run(["bundle", op, "--input", str(path)], capsys)[0] == 0


def test_verification_mismatch_exits_1(capsys, monkeypatch):
    import ulrich_chern.cli as cli

    monkeypatch.setitem(cli.Q10_SPRIME_CHERN, 6, 529)
    assert _run(["verify", "chern-q10"], capsys)[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["nonsense"],
        ["spinor", "chern", "--n", "99"],
        ["spinor", "chern", "--n", "5", "--kind", "sprime"],
        ["quadric", "classify", "--n", "10", "--rmax", "3"],
        ["quadric", "nu", "--n", "5", "--a", "1", "--b", "1"],
        ["quadric", "nu", "--n", "4", "--a", "0", "--b", "0"],
        ["verify", "example-un", "--n", "3"],
        ["verify", "example-un", "--n", "3", "--r", "1"],
        ["verify", "thm4", "--rmax", "40"],
        ["verify", "table1", "--rmax", "0"],
        ["ring", "eval", "--ring", "Q4", "b9"],
        ["ring", "eval", "--ring", "Q4", "h/2"],
        ["ring", "eval", "--ring", "Q4", "h^-1"],
        ["ring", "eval", "--ring", "banana", "h"],
        ["ring", "eval", "--ring", "Q4", "import os"],
        ["bundle", "nu", "--input", "/nonexistent.json"],
        ["spinor", "chern", "--n", "4", "--format", "xml"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert _run(argv, capsys)[0] == 2


@pytest.mark.parametrize(
    "payload",
    [
        "",
        "{",
        "[]",
        '{"ring": {"type": "quadric", "n": 4}}',
        '{"ring": {"type": "torus"}, "rank": 1, "chern": {}}',
        '{"ring": {"type": "quadric", "n": 4}, "rank": 1, "chern": {"b0": 1, "b1": 1, "b2": 1}}',
        '{"ring": {"type": "quadric", "n": 4}, "rank": 1, "chern": {"b7": 1}}',
        '{"ring": {"type": "quadric", "n": 4}, "rank": 1, "chern": {"b0": 2}}',
        '{"ring": "Q4", "rank": 1, "chern": {}}',
        '{"ring": {"type": "quadric", "n": 4}, "rank": 1, "chern": []}',
    ],
)
def test_malformed_bundle_json_exits_2(payload, capsys, monkeypatch):
    assert _run(["bundle", "nu"], capsys, payload, monkeypatch)[0] == 2


json_values = st.recursive(
    st.none() | st.booleans() | st.integers(-50, 50) | st.text(max_size=5),
    lambda inner: st.lists(inner, max_size=4) | st.dictionaries(st.text(max_size=6), inner, max_size=4),
    max_leaves=12,
)


@given(
    st.one_of(
        st.text(max_size=40),
        json_values.map(json.dumps),
        st.fixed_dictionaries(
            {
                "ring": st.sampled_from([{"type": "quadric", "n": 4}, {"type": "multiprojective", "dims": [1, 2]}]),
                "rank": st.integers(-2, 6),
                "chern": st.dictionaries(st.sampled_from(["b0", "b1", "b2", "bp2", "t1", "t2^2", "x"]), st.integers(-3, 3)),
            }
        ).map(json.dumps),
    )
)
def test_bundle_input_never_crashes(payload):
    old = sys.stdin
    sys.stdin = io.StringIO(payload)
    try:
        code = run(["bundle", "nu", "--format", "json"])
    finally:
        sys.stdin = old
    assert code in (0, 2)


@given(st.text(alphabet="hbp0123456789t+-*^() ", max_size=16))
def test_ring_eval_never_crashes(expr):
    code = run(["ring", "eval", "--ring", "Q6", expr, "--format", "json"])
    assert code in (0, 2)


def test_parse_helpers():
    assert parse_ring("P1xP2") == MultiProjective((1, 2))
    assert parse_ring("q6") == Quadric(6)
    Q = Quadric(6)
    assert parse_class("2*h - h + 0", Q) == hyperplane(Q)
    assert parse_class("3", Q).to_dict() == {"b0": 3}


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ulrich_chern", "quadric", "nu", "--n", "4", "--a", "1", "--b", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "6\n"
