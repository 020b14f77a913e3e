import json

import pytest

from zdbench.cli import main
from zdbench.report import (RingCache, analyze_report, canonical_json,
                            collect_witnesses, render_text, revalidate_report,
                            revalidate_witness, search_report,
                            theorems_report, witness_report)
from zdbench.universe import UniverseLimits

SMALL = UniverseLimits(zmod_max=4, product_component_max=2, max_module=20,
                       max_sum_pairs=1)


def test_analyze_report_shape():
    rep = analyze_report("Prod(Z2,Z2)", "Cyclic((0,1))")
    assert rep["schema_version"] == 1
    assert rep["ring"]["zero_divisors"]["display"] == ["(0,0)", "(1,0)", "(0,1)"]
    assert rep["module"]["auslander"]["holds"] is False
    assert rep["module"]["auslander"]["witness"]["display"] == "(1,0)"
    assert rep["module"]["torsion_free"]["holds"] is True
    assert rep["module"]["flat"]["holds"] is True
    assert rep["module"]["natural_map_kernel_trivial"] is True


def test_analyze_witnesses_revalidate():
    rep = analyze_report("Prod(Z2,Z2)", "Cyclic((0,1))")
    result = revalidate_report(rep)
    assert result["total"] >= 1 and not result["failed"]


def test_revalidation_catches_tampering():
    rep = analyze_report("Prod(Z2,Z2)", "Cyclic((0,1))")
    rep["witnesses"][0]["value"] = [1, 1]  # a unit is no Auslander witness
    result = revalidate_report(rep)
    assert result["failed"]


def test_revalidate_witness_kinds():
    ok = revalidate_witness({
        "kind": "torsion_free", "ring": "Z", "module": "Z/6", "value": 2,
        "display": "2"})
    assert ok
    assert not revalidate_witness({
        "kind": "torsion_free", "ring": "Z", "module": "Z/6", "value": 5,
        "display": "5"})
    with pytest.raises(ValueError):
        revalidate_witness({"kind": "nonsense", "ring": "Z4", "value": 0})


def test_theorems_report_small_suite():
    rep = theorems_report("rem-3.3-*", limits=SMALL)
    assert rep["passed"] is True
    assert [s["id"] for s in rep["statements"]] == ["rem-3.3-1", "rem-3.3-2", "rem-3.3-3"]
    repro = rep["statements"][2]["extra"]["reproduction"]
    assert repro["auslander"] is False and repro["torsion_free"] is True


def test_theorems_unknown_suite():
    with pytest.raises(ValueError):
        theorems_report("nothing-matches-*", limits=SMALL)


def test_search_report():
    rep = search_report("torsion_free", "auslander", limits=SMALL)
    assert rep["count"] == len(rep["witnesses"]) > 0


def test_witness_report():
    rep = witness_report("2*X+2", "2", "Z4")
    assert rep["witness"]["value"] == 2
    assert revalidate_witness(rep["witness"])


def test_cache_roundtrip(tmp_path):
    cache = RingCache(str(tmp_path))
    first = analyze_report("Z12", "Reg", cache=cache)
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    cache2 = RingCache(str(tmp_path))
    second = analyze_report("Z12", "Reg", cache=cache2)
    assert canonical_json(first) == canonical_json(second)
    third = analyze_report("Z12", "Reg", cache=None)
    assert canonical_json(first) == canonical_json(third)


def test_cache_corruption_recovers(tmp_path, caplog):
    cache = RingCache(str(tmp_path))
    baseline = analyze_report("Z12", "Reg", cache=cache)
    path = next(tmp_path.iterdir())
    path.write_text("{ not json")
    cache2 = RingCache(str(tmp_path))
    with caplog.at_level("WARNING"):
        again = analyze_report("Z12", "Reg", cache=cache2)
    assert canonical_json(again) == canonical_json(baseline)
    assert any("recomputing" in rec.message for rec in caplog.records)


def test_cache_checksum_mismatch(tmp_path):
    cache = RingCache(str(tmp_path))
    analyze_report("Z12", "Reg", cache=cache)
    path = next(tmp_path.iterdir())
    payload = json.loads(path.read_text())
    payload["zero_divisors"] = []
    path.write_text(json.dumps(payload))
    cache2 = RingCache(str(tmp_path))
    assert cache2.load("Z12") is None


def test_cache_memory_fallback():
    cache = RingCache(None)
    cache.store("Z6", [[0]], [0])
    assert cache.load("Z6") is not None


def test_render_text_derived_from_report():
    rep = analyze_report("Z6", "Reg")
    text = render_text(rep)
    assert "Z(R) = {0, 2, 3, 4}" in text
    assert "auslander = True" in text


def test_cli_analyze_json(capsys):
    code = main(["analyze", "--ring", "Prod(Z2,Z2)", "--module", "Cyclic((0,1))",
                 "--no-cache"])
    assert code == 0
    out = capsys.readouterr().out
    rep = json.loads(out)
    assert rep["module"]["auslander"]["holds"] is False


def test_cli_stdout_deterministic(capsys):
    argv = ["analyze", "--ring", "Z12", "--module", "Free(2)", "--no-cache"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second


def test_cli_timing_flag_adds_field(capsys):
    assert main(["analyze", "--ring", "Z4", "--module", "Reg", "--no-cache",
                 "--timing"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert "timing" in rep


def test_cli_witness(capsys):
    assert main(["witness", "--f", "2*X+2", "--g", "2", "--ring", "Z4"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["witness"]["display"] == "2"


def test_cli_witness_bad_pair(capsys):
    assert main(["witness", "--f", "2*X+2", "--g", "3", "--ring", "Z4"]) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_dsl_error(capsys):
    assert main(["analyze", "--ring", "Z1", "--module", "Reg"]) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_theorems_small(capsys):
    code = main(["theorems", "--suite", "rem-3.3-3", "--zmod-max", "4",
                 "--max-module", "20", "--no-cache"])
    assert code == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["passed"] is True
    assert rep["bounds"]["zmod_max"] == 4


def test_cli_theorems_failing_suite_exits_one(capsys, monkeypatch):
    from zdbench import statements
    from zdbench.statements import StatementReport

    def failing(U):
        rep = StatementReport("zz-test", "always fails")
        rep.applicable.append("synthetic")
        rep.checked = 1
        rep.failures.append({"member": "synthetic"})
        return rep

    monkeypatch.setitem(statements.REGISTRY, "zz-test", failing)
    code = main(["theorems", "--suite", "zz-test", "--zmod-max", "2",
                 "--max-module", "8", "--no-cache"])
    assert code == 1
    rep = json.loads(capsys.readouterr().out)
    assert rep["passed"] is False


def test_cli_search(capsys):
    code = main(["search", "--hyp", "reg_module", "--concl", "auslander",
                 "--zmod-max", "4", "--no-cache"])
    assert code == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["count"] == 0


def test_cli_env_cache_dir(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("ZDBENCH_CACHE_DIR", str(tmp_path))
    assert main(["analyze", "--ring", "Z6", "--module", "Reg"]) == 0
    capsys.readouterr()
    assert list(tmp_path.iterdir())


def test_collect_witnesses_walks_nested():
    rep = {"a": [{"kind": "x", "value": 1}], "b": {"c": {"kind": "y", "value": 2}}}
    assert len(collect_witnesses(rep)) == 2
