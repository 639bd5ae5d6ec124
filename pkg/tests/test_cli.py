"""Command-line behavior: golden outputs for every fixture file, exit codes,
determinism, structured output."""

import json
import os
from pathlib import Path

import pytest

from idealkit.cli import main

FIXTURES = Path(__file__).parent / "fixtures"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decompose_fig1(capsys):
    code, out, _ = run(capsys, "decompose", FIXTURES / "fig1.ideal")
    assert code == 0
    assert out.splitlines() == [
        "(x1^2, x2^2, x4^2)", "(x1, x3, x5)",
        "(x2^2, x3, x4^2)", "(x2^2, x3, x5)"]


def test_decompose_radical_and_terai(capsys):
    code, out, _ = run(capsys, "decompose", FIXTURES / "radical.ideal")
    assert code == 0
    assert set(out.splitlines()) == {
        "(x1, x3)", "(x1, x2^2, x4)", "(x2, x3)", "(x2, x4)"}
    code, out, _ = run(capsys, "assprimes", FIXTURES / "terai.ideal")
    assert code == 0
    assert all(len(line.split(", ")) == 2 for line in out.splitlines())


def test_primary_and_assprimes(capsys):
    code, out, _ = run(capsys, "primary", FIXTURES / "ex2_12.ideal")
    assert code == 0 and "radical" in out
    code, out, _ = run(capsys, "assprimes", FIXTURES / "ex3_16.ideal")
    assert out.splitlines() == ["(x1, x2)", "(x1, x3)", "(x2, x3)"]


def test_symbolic_example_2_10(capsys):
    code, out, _ = run(capsys, "symbolic", "--k", "2", FIXTURES / "ex2_10.ideal")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "k=1"
    k2 = lines[lines.index("k=2"):]
    extra = next(l for l in k2 if "extra" in l)
    assert "x1*x2^2*x3" in extra and "x1*x2^2*x5" in extra


def test_symbolic_ass_variant(capsys):
    code, out, _ = run(capsys, "symbolic", "--k", "1", "--variant", "ass",
                       FIXTURES / "ex2_12.ideal")
    assert code == 0
    assert "extra:    none" in out


def test_ntf(capsys):
    code, out, _ = run(capsys, "ntf", "--kmax", "3", FIXTURES / "ex2_10.ideal")
    assert code == 0
    assert "k=1: equal" in out and "k=2: NOT equal" in out
    assert "first failure at k=2" in out


def test_duals(capsys):
    code, out, _ = run(capsys, "dual", FIXTURES / "dual_strict.ideal")
    assert code == 0 and out.strip() == "(x2^2*x3, x1)"
    code, out, _ = run(capsys, "stardual", FIXTURES / "dual_strict.ideal")
    assert code == 0 and out.strip() == "(x2^2*x3, x1*x3, x1^2)"


def test_rees_and_simis(capsys):
    code, out, _ = run(capsys, "rees", FIXTURES / "ex2_10.ideal")
    assert code == 0 and "# rays" in out and "# inequalities" in out
    code, out, _ = run(capsys, "simis", FIXTURES / "ex2_10.ideal")
    assert code == 0 and "# inequalities" in out


def test_hilbert_simis_18_rows(capsys):
    code, out, _ = run(capsys, "hilbert", "--simis", FIXTURES / "ex2_22.ideal")
    assert code == 0
    assert len(out.splitlines()) == 18


def test_hilbert_cone_file(capsys):
    code, out, _ = run(capsys, "hilbert", FIXTURES / "wedge.cone")
    assert code == 0
    assert out.splitlines() == ["1 0", "1 1", "1 2"]


def test_normal_and_closure(capsys):
    code, out, _ = run(capsys, "normal", FIXTURES / "fig1.ideal")
    assert code == 0 and out.strip() == "normal: false"
    code, out, _ = run(capsys, "closure", FIXTURES / "fig1.ideal")
    assert code == 0
    assert "x1*x2*x3" in out and "x2*x4*x5" in out


def test_sreesgens(capsys):
    code, out, _ = run(capsys, "sreesgens", FIXTURES / "ex2_22.ideal")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 18
    assert "x1*x2^2 t^1" in lines


def test_digraph_ideal_and_prt(capsys):
    code, out, _ = run(capsys, "digraph-ideal", FIXTURES / "fig1.digraph")
    assert code == 0
    assert out.strip() == "(x4^2*x5, x3*x4^2, x2^2*x5, x2^2*x3, x1*x2^2, x1^2*x3)"
    code, prt_out, _ = run(capsys, "prt", FIXTURES / "fig1.digraph")
    code2, dec_out, _ = run(capsys, "decompose", FIXTURES / "fig1.ideal")
    assert prt_out == dec_out


def test_digraph_ideal_json_form(capsys):
    code, out, _ = run(capsys, "digraph-ideal", FIXTURES / "ex3_13.digraph")
    assert code == 0
    assert out.strip() == "(x3*x4, x2^2*x3, x1*x3, x1*x2)"


def test_dual_strict_inclusion_fixture(capsys):
    _, dual_out, _ = run(capsys, "dual", FIXTURES / "ex3_17.ideal")
    _, star_out, _ = run(capsys, "stardual", FIXTURES / "ex3_17.ideal")
    assert dual_out.strip() == "(x2^2*x3, x1*x3^2, x1^2*x2)"
    assert dual_out != star_out


def test_reversed_fig1_departs_from_unmixedness(capsys):
    code, out, _ = run(capsys, "prt", FIXTURES / "fig1_reversed.digraph")
    assert code == 0
    heights = {line.count(",") for line in out.splitlines()}
    assert len(heights) > 1  # components of different heights: not unmixed


def test_covers(capsys):
    code, out, _ = run(capsys, "covers", FIXTURES / "fig1.digraph")
    assert code == 0
    assert len(out.splitlines()) == 4
    assert any("L3" in line for line in out.splitlines())


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", FIXTURES / "fig1.digraph")
    assert code == 0 and "status:" in out
    code, out, _ = run(capsys, "classify", FIXTURES / "radical.digraph")
    assert code == 0 and "not_cohen_macaulay" in out


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", FIXTURES / "fig1.digraph")
    assert code == 0
    assert out.splitlines()[0] == "weights: x1=2 x2=2 x3=1 x4=2 x5=1"


def test_polarize(capsys):
    code, out, _ = run(capsys, "polarize", FIXTURES / "ex3_16.ideal")
    assert code == 0
    assert "x1_1" in out and "<- x1 (copy 1)" in out


def test_structured_output_and_env_default(capsys, monkeypatch):
    code, out, _ = run(capsys, "--format", "structured",
                       "decompose", FIXTURES / "ex3_16.ideal")
    assert code == 0
    doc = json.loads(out)
    assert doc["components"] == [
        {"x1": 1, "x2": 1}, {"x1": 1, "x3": 2}, {"x2": 2, "x3": 2}]
    monkeypatch.setenv("IDEALKIT_FORMAT", "structured")
    code, out, _ = run(capsys, "normal", FIXTURES / "fig1.ideal")
    assert json.loads(out) == {"normal": False}


def test_determinism_byte_identical(capsys):
    _, first, _ = run(capsys, "hilbert", "--simis", FIXTURES / "ex2_22.ideal")
    _, second, _ = run(capsys, "hilbert", "--simis", FIXTURES / "ex2_22.ideal")
    assert first == second


def test_exit_code_domain_errors(capsys, tmp_path):
    code, _, err = run(capsys, "decompose", tmp_path / "missing.ideal")
    assert code == 1 and err
    # embedded primes violate the Simis cone hypothesis
    code, _, err = run(capsys, "simis", FIXTURES / "ex2_12.ideal")
    assert code == 1 and "embedded" in err
    bad = tmp_path / "bad.ideal"
    bad.write_text("x1*x2\nx2^\n")
    code, _, err = run(capsys, "decompose", bad)
    assert code == 1 and "line 2" in err


def test_exit_code_resource_cap(capsys):
    code, _, err = run(capsys, "hilbert", "--simis",
                       "--max-lattice-points", "1", FIXTURES / "ex2_22.ideal")
    assert code == 2 and "budget" in err


def test_k_validation(capsys):
    code, _, err = run(capsys, "symbolic", "--k", "0", FIXTURES / "ex2_10.ideal")
    assert code == 1 and "k" in err
