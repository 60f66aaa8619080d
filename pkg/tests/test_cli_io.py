from __future__ import annotations

import json

import numpy as np
import pytest

from vsrep import catalog as cat
from vsrep.cli import main
from vsrep.heart import heart
from vsrep.rep import perm_to_rep
from vsrep.io import ParseError, diagnosis_report, parse_perm_group, parse_representation, read_input
from vsrep.normalg import (
    Induced,
    NotAbsolutelyIrreducible,
    NotIrreducible,
    TensorWitness,
    very_simple_exact,
)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_diagnose_catalog_gl2f2(capsys):
    code, out = run(["diagnose", "--catalog", "gl2f2_natural"], capsys)
    rep = json.loads(out)
    assert code == 10
    assert rep["verdict"] == "TwistedMultiplication"
    assert rep["witness"]["surjective"] is True
    assert rep["clause"].startswith("condition (iv)")


def test_diagnose_heart_exit_codes(capsys):
    assert run(["diagnose", "--catalog", "sym", "5", "--heart"], capsys)[0] == 0
    code, out = run(["diagnose", "--catalog", "cyclic", "5", "--heart"], capsys)
    assert code == 10 and json.loads(out)["verdict"] == "NotAbsolutelyIrreducible"


def test_permutation_group_without_heart_is_its_permutation_module(capsys):
    code, out = run(["diagnose", "--catalog", "sym", "5"], capsys)
    assert code == 10 and json.loads(out)["verdict"] == "NotIrreducible"


def test_randomized_report_is_flagged(capsys):
    code, out = run(["diagnose", "--catalog", "sym", "6", "--heart", "--mode", "randomized", "--trials", "8"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["probabilistic"] is True and rep["mode"] == "randomized"


def test_reports_are_reproducible(capsys):
    a = json.loads(run(["diagnose", "--catalog", "agl1", "9", "--heart"], capsys)[1])
    b = json.loads(run(["diagnose", "--catalog", "agl1", "9", "--heart"], capsys)[1])
    a.pop("wall_time")
    b.pop("wall_time")
    assert a == b


def test_file_input_and_hash(capsys, tmp_path):
    path = tmp_path / "rep.json"
    path.write_text(json.dumps(cat.gl2f2_wreath().to_json()))
    code, out = run(["diagnose", str(path)], capsys)
    rep = json.loads(out)
    assert code == 10 and rep["verdict"] == "Induced" and rep["input"].startswith("sha256:")


def test_out_flag(capsys, tmp_path):
    out = tmp_path / "report.json"
    code, printed = run(["diagnose", "--catalog", "gl2f2_tensor", "--out", str(out)], capsys)
    assert printed == "" and json.loads(out.read_text())["verdict"] == "TensorSplit"


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("VSREP_SEED", "17")
    assert json.loads(run(["diagnose", "--catalog", "gl2f2_natural"], capsys)[1])["seed"] == 17
    monkeypatch.setenv("VSREP_SEED", "x")
    assert main(["diagnose", "--catalog", "gl2f2_natural"]) == 1


def test_cap_overflow_exit_code(capsys):
    code, out = run(["diagnose", "--catalog", "gl2f2_tensor", "--cap", "1"], capsys)
    assert code == 2 and json.loads(out)["verdict"] == "Undecided"


@pytest.mark.parametrize(
    "payload",
    [
        {"field": {"p": 2, "e": 1}, "dim": 2, "generators": [[[1, 2], [0, 1]]]},
        {"field": {"p": 2, "e": 1}, "dim": 2, "generators": [[[1, 0, 0], [0, 1, 0]]]},
        {"field": {"p": 2, "e": 1}, "dim": 0, "generators": []},
        {"field": {"p": 4, "e": 1}, "dim": 1, "generators": [[[1]]]},
        {"field": {"p": 2, "e": 1}, "dim": 2, "generators": [[[0, 0], [0, 0]]]},
        {"degree": 3, "generators": [[0, 0, 1]]},
        {"nothing": 1},
    ],
)
def test_malformed_inputs_exit_1(capsys, tmp_path, payload):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(payload))
    assert main(["diagnose", str(path)]) == 1


def test_invalid_json_and_missing_file(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{")
    assert main(["diagnose", str(path)]) == 1
    assert main(["diagnose", str(tmp_path / "missing.json")]) == 1
    assert main(["diagnose"]) == 1
    assert main(["diagnose", "--catalog", "gl2f2_natural", "--heart"]) == 1


def test_heart_subcommand(capsys, tmp_path):
    code, out = run(["heart", "--catalog", "sym", "6"], capsys)
    data = json.loads(out)
    assert code == 0 and data["dim"] == 4
    assert parse_representation(data).dim == 4
    path = tmp_path / "g.json"
    path.write_text(json.dumps(cat.sym(5).to_json()))
    assert json.loads(run(["heart", str(path)], capsys)[1])["dim"] == 4
    assert main(["heart", "--catalog", "gl2f2_natural"]) == 1


def test_catalog_subcommand(capsys):
    code, out = run(["catalog", "list"], capsys)
    assert code == 0 and "psl2 <q>" in out
    code, out = run(["catalog", "build", "agl1", "5"], capsys)
    assert code == 0 and parse_perm_group(json.loads(out)) == cat.agl1(5)
    assert main(["catalog", "build"]) == 1
    assert main(["catalog", "build", "zzz"]) == 1


def test_selftest_quick(capsys):
    code, out = run(["selftest", "--quick"], capsys)
    assert code == 0 and out.count("PASS") == 4


def test_read_input_dispatch(tmp_path):
    p = tmp_path / "x.json"
    p.write_text(json.dumps(cat.sym(4).to_json()))
    assert read_input(p) == cat.sym(4)
    p.write_text(json.dumps(cat.gl2f2_natural().to_json()))
    assert read_input(p) == cat.gl2f2_natural()
    p.write_text("[1, 2]")
    with pytest.raises(ParseError):
        read_input(p)


def _rebuild_and_verify(report, rep):
    """Re-verify a witness using only the JSON report and the input."""
    from vsrep.linalg import Subspace

    F = rep.field
    w = report["witness"]
    tag = report["verdict"]
    if tag == "NotIrreducible":
        sub = Subspace.from_vectors(F, rep.dim, np.array(w["submodule"], dtype=np.uint8))
        return NotIrreducible(sub).verify(rep)
    if tag == "Induced":
        blocks = tuple(Subspace.from_vectors(F, rep.dim, np.array(b, dtype=np.uint8)) for b in w["blocks"])
        return Induced(w["r"], blocks, tuple(map(tuple, w["block_perms"]))).verify(rep)
    if tag == "TensorSplit":
        arr = lambda xs: tuple(np.array(x, dtype=np.uint8) for x in xs)
        return TensorWitness(np.array(w["U"], dtype=np.uint8), arr(w["A"]), arr(w["B"])).verify(rep)
    if tag == "NotAbsolutelyIrreducible":
        return NotAbsolutelyIrreducible(
            w["end_degree"], np.array(w["end_basis"], dtype=np.uint8), np.array(w["generator"], dtype=np.uint8), tuple(w["generator_minpoly"])
        ).verify(rep)
    raise AssertionError(tag)


@pytest.mark.parametrize(
    "build",
    [
        lambda: cat.gl2f2_tensor(),
        lambda: cat.gl2f2_wreath(),
        lambda: heart(cat.cyclic(5)).rep,
        lambda: perm_to_rep(cat.sym(4)),
    ],
)
def test_report_witnesses_are_self_contained(build):
    rep = build()
    report = json.loads(json.dumps(diagnosis_report(very_simple_exact(rep), rep, "test")))
    assert _rebuild_and_verify(report, rep)
