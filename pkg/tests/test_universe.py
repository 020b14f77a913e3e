import pytest

from zdbench.statements import (REGISTRY, REQUIRED_IDS, StatementReport,
                                parse_predicate_expression, run_statement,
                                run_suite, search_counterexample,
                                z_adapter_check)
from zdbench.universe import (UniverseLimits, ZAdapterCase, generate_universe,
                              z_adapter_cases)


def test_default_universe_counts(universe):
    # regression baselines recorded from the first complete build
    assert len(universe.rings) == 23
    pair_count = sum(len(v) for v in universe.modules.values())
    assert pair_count == 273
    assert sum(len(v) for v in universe.algebras.values()) == 51
    assert len(universe.rings) >= 10 and pair_count >= 60
    assert universe.counts["rings_zmod"] == 11


def test_universe_without_products():
    limits = UniverseLimits(zmod_max=4, product_component_max=0,
                            max_module=20, max_sum_pairs=1)
    U = generate_universe(limits)
    assert all(R.kind != "product" for R in U.rings)


def test_module_size_cap_blocks_free_rank_two():
    limits = UniverseLimits(zmod_max=4, product_component_max=0,
                            max_module=4, max_sum_pairs=1)
    U = generate_universe(limits)
    for R in U.rings:
        for M in U.modules[R.descriptor]:
            if M.tag == "Free(2)":
                assert R.size <= 2
            assert M.size <= 4 or M.tag == "Reg" or R.size > 4


def test_deterministic_generation_order():
    limits = UniverseLimits(zmod_max=5, product_component_max=2,
                            max_module=25, max_sum_pairs=2)
    a = generate_universe(limits)
    b = generate_universe(limits)
    assert [R.descriptor for R in a.rings] == [R.descriptor for R in b.rings]
    for R in a.rings:
        assert ([M.tag for M in a.modules[R.descriptor]]
                == [M.tag for M in b.modules[R.descriptor]])


def test_adapter_cases():
    case = ZAdapterCase(6)
    assert case.is_auslander().holds
    tf = case.is_torsion_free()
    assert not tf.holds and tf.witness["element"] == 2
    assert ZAdapterCase(5).is_torsion_free().witness["element"] == 5
    assert case.contains_ideal_n()
    assert case.in_zero_divisors(0)  # gcd(0, 6) = 6
    assert not case.in_zero_divisors(5)
    assert len(z_adapter_cases()) == 29


def test_z_adapter_check_reports():
    rep = z_adapter_check("Z/6")
    assert rep["auslander"] is True
    assert rep["torsion_free"] is False
    assert rep["torsion_free_witness"]["value"] == 2
    assert rep["zero_divisors_contain_ideal_n"] is True
    assert z_adapter_check("Z/5")["torsion_free_witness"]["value"] == 5
    assert z_adapter_check("Z/1")["degenerate"] is True
    with pytest.raises(ValueError):
        z_adapter_check("Z/31")
    with pytest.raises(ValueError):
        z_adapter_check("Q/6")


def test_registry_complete_and_lookup(small_universe):
    assert set(REGISTRY) == set(REQUIRED_IDS)
    assert len(REGISTRY) == 33
    with pytest.raises(ValueError):
        run_statement("thm-9.9", small_universe)


def test_run_suite_glob(small_universe):
    reports = run_suite("thm-2.*", small_universe)
    assert [r.id for r in reports] == ["thm-2.4", "thm-2.8", "thm-2.13"]


def test_full_suite_on_small_universe(small_universe):
    reports = run_suite("all", small_universe)
    assert len(reports) == 33
    for rep in reports:
        assert rep.passed, f"{rep.id}: {rep.failures[:2]}"


def test_statement_report_warning_when_not_exercised():
    rep = StatementReport("x", "y").finish()
    assert rep.warnings and not rep.applicable
    assert rep.to_dict()["passed"] is True


def test_search_examples(small_universe):
    hits = search_counterexample("torsion_free", "auslander", small_universe)
    members = {h["member"] for h in hits}
    assert "Prod(Z2,Z2) :: Cyclic((0,1))" in members
    hits2 = search_counterexample("auslander", "torsion_free", small_universe)
    assert {"kind": "adapter", "member": "Z :: Z/6"} in hits2
    assert search_counterexample("reg_module", "auslander", small_universe) == []


def test_search_expression_parsing():
    assert parse_predicate_expression("not flat and auslander") == [
        ("flat", True), ("auslander", False)]
    assert parse_predicate_expression("!flat && auslander") == [
        ("flat", True), ("auslander", False)]
    with pytest.raises(ValueError):
        parse_predicate_expression("flat and ")
    with pytest.raises(ValueError):
        parse_predicate_expression("fl at")


def test_search_unknown_predicate(small_universe):
    with pytest.raises(ValueError):
        search_counterexample("bogus", "auslander", small_universe)


def test_search_algebra_members(small_universe):
    hits = search_counterexample("faithfully_flat and mccoy",
                                 "nontrivial_extension", small_universe)
    members = {h["member"] for h in hits}
    assert "Algebra(Z2, Z2)" in members  # self algebras are the trivial ones


def test_toggle_insensitivity_of_suite_verdicts():
    import zdbench.rings as rings
    limits = UniverseLimits(zmod_max=4, product_component_max=2,
                            max_module=20, max_sum_pairs=1)
    ids = ["def-2.1", "thm-2.4", "tf-3.1", "prop-a-def", "rem-3.3-3"]
    U1 = generate_universe(limits)
    baseline = [(r.id, r.passed) for r in (run_statement(i, U1) for i in ids)]
    try:
        rings.INCLUDE_ZERO_IN_ZD_SETS = False
        U2 = generate_universe(limits)
        flipped = [(r.id, r.passed) for r in (run_statement(i, U2) for i in ids)]
    finally:
        rings.INCLUDE_ZERO_IN_ZD_SETS = True
    assert baseline == flipped


def test_statement_reports_are_serializable(small_universe):
    import json
    rep = run_statement("rem-3.3-3", small_universe)
    blob = json.dumps(rep.to_dict())
    assert "reproduction" in blob
