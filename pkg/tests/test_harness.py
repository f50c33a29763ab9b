"""The check registry, the per-graph runner, and the stream verifier."""

import re

import pytest

import oracles

from lmis import (
    CHECK_REGISTRY,
    Graph,
    GraphContext,
    GuardrailExceeded,
    MAX_GUARDRAIL_N,
    REPORT_SCHEMA,
    RunSummary,
    SetFamily,
    emit_graph6,
    enumeration_lines,
    resolve_checks,
    run_checks,
    verify_stream,
)
from lmis.harness import (
    check_inclusion_chain,
    check_ke_predicate,
    check_nt_extension,
    check_pereyra_crosscheck,
)
from lmis.independence import FamilyKind
from lmis.reporting import CheckOutcome

jsonschema = pytest.importorskip("jsonschema")

ALL_CHECKS = (
    "inclusion_chain",
    "canonical_augmentoid",
    "lemmas_all_pairs",
    "decomposition_all_S",
    "counting",
    "ke_predicate",
    "pereyra_crosscheck",
    "nt_extension",
)


# --------------------------------------------------------------------------
# registry and selection


def test_registry_names_are_frozen():
    assert tuple(CHECK_REGISTRY) == ALL_CHECKS


def test_resolve_checks_defaults_to_all():
    assert resolve_checks(None) == ALL_CHECKS


def test_resolve_checks_keeps_registry_order():
    assert resolve_checks(["counting", "inclusion_chain"]) == (
        "inclusion_chain",
        "counting",
    )
    assert resolve_checks(reversed(ALL_CHECKS)) == ALL_CHECKS


def test_resolve_checks_rejects_unknown_names():
    with pytest.raises(ValueError) as info:
        resolve_checks(["counting", "no_such_check"])
    assert "no_such_check" in str(info.value)
    assert "available" in str(info.value)


# --------------------------------------------------------------------------
# run_checks


def test_run_checks_tree_all_pass(tree6):
    report = run_checks(tree6)
    assert report.graph_id == "EpG_"
    assert report.n == 6 and report.m == 5
    assert [c.name for c in report.checks] == list(ALL_CHECKS)
    assert report.all_passed
    assert report.failures == []
    jsonschema.validate(report.to_dict(), REPORT_SCHEMA)


def test_run_checks_subset_and_custom_id(tree6):
    report = run_checks(tree6, checks=["ke_predicate"], graph_id="tree")
    assert report.graph_id == "tree"
    assert [c.name for c in report.checks] == ["ke_predicate"]
    cert = report.checks[0].certificate
    assert cert["alpha"] == 4 and cert["mu"] == 2 and cert["n"] == 6
    assert cert["konig_egervary"] is True and cert["bipartite"] is True


def test_run_checks_certificates(tree6):
    by_name = {c.name: c for c in run_checks(tree6).checks}
    assert by_name["inclusion_chain"].certificate == {
        "crit_indep": 3,
        "crown": 23,
        "psi": 23,
    }
    assert by_name["canonical_augmentoid"].certificate == {"ordered_pairs": 23 * 23}
    assert by_name["decomposition_all_S"].certificate == {"anchors": 23}
    counting = by_name["counting"].certificate
    assert counting["anchors"] == 23
    assert by_name["pereyra_crosscheck"].certificate["critical_difference"] == 2
    assert by_name["pereyra_crosscheck"].certificate["families_equal"] is False
    assert by_name["nt_extension"].certificate == {"psi": 23, "omega": 2}


def test_run_checks_guardrail():
    big = Graph.from_edges(13, [])
    with pytest.raises(GuardrailExceeded):
        run_checks(big)
    report = run_checks(big, checks=["ke_predicate"], force=True)
    assert report.all_passed


def test_graph_context_caches(tree6):
    ctx = GraphContext(tree6)
    assert ctx.psi is ctx.psi
    assert ctx.alpha == 4 and ctx.mu == 2 and ctx.critical_value == 2


def test_run_checks_on_the_zero_vertex_graph():
    report = run_checks(Graph(0, []))
    assert report.graph_id == "?"
    assert report.n == 0 and report.m == 0
    assert report.all_passed


def test_run_checks_on_sampled_larger_graphs(rng):
    # Beyond the exhaustive sweeps: spot-check the containment and
    # equivalence checks at 7 and 8 vertices.
    checks = ["inclusion_chain", "ke_predicate", "pereyra_crosscheck", "nt_extension"]
    for n in (7, 8):
        for _ in range(10):
            g = Graph.from_edges(n, oracles.random_edges(rng, n, rng.uniform(0.2, 0.8)))
            report = run_checks(g, checks=checks)
            assert report.all_passed, report.failures


# --------------------------------------------------------------------------
# failure reporting (fabricated contexts; the real families never fail)


def test_inclusion_chain_reports_a_crit_offender(star):
    ctx = GraphContext(star)
    hub = star.vertex_set(["x"])  # independent, but no crown: |N| > |S|
    ctx.__dict__["crit_indep"] = SetFamily(FamilyKind.CRIT_INDEP, star, (hub,))
    outcome = check_inclusion_chain(ctx)
    assert not outcome.passed
    assert outcome.counterexample == {
        "set": ["x"],
        "violated": "CritIndep within Crown",
    }


def test_inclusion_chain_reports_a_crown_offender(triangle_pendant):
    tp = triangle_pendant
    ctx = GraphContext(tp)
    ctx.__dict__["crit_indep"] = SetFamily(FamilyKind.CRIT_INDEP, tp, ())
    ctx.__dict__["crown"] = SetFamily(FamilyKind.CROWN, tp, (tp.vertex_set(["b"]),))
    outcome = check_inclusion_chain(ctx)
    assert not outcome.passed
    assert outcome.counterexample["violated"] == "Crown within Psi"
    assert outcome.counterexample["set"] == ["b"]


def test_ke_predicate_reports_bipartite_violations(star):
    ctx = GraphContext(star)
    ctx.__dict__["alpha"] = 1  # sabotage: the real value is 3
    outcome = check_ke_predicate(ctx)
    assert not outcome.passed
    assert outcome.counterexample["problem"] == (
        "bipartite graph without the alpha + mu = n identity"
    )


def test_crosscheck_reports_an_equivalence_break(triangle_pendant):
    tp = triangle_pendant
    ctx = GraphContext(tp)
    # Real critical difference is 0, so dropping one member from the crown
    # family makes the two sides of the equivalence disagree.
    real = ctx.crit_indep
    ctx.__dict__["crown"] = SetFamily(FamilyKind.CROWN, tp, real.members[1:])
    outcome = check_pereyra_crosscheck(ctx)
    assert not outcome.passed
    assert outcome.counterexample["families_equal"] is False
    assert outcome.counterexample["critical_difference"] == 0


def test_nt_extension_reports_unextendable_sets(tree6):
    ctx = GraphContext(tree6)
    ctx.__dict__["omega"] = SetFamily(FamilyKind.OMEGA, tree6, ())
    outcome = check_nt_extension(ctx)
    assert not outcome.passed
    assert outcome.counterexample == {"set": []}  # the empty set already fails


# --------------------------------------------------------------------------
# stream verification


def summarize(results):
    summary = RunSummary()
    for kind, payload in results:
        summary.absorb(kind, payload)
    return summary


def test_verify_stream_exhaustive_three():
    results = list(verify_stream(enumeration_lines(3)))
    summary = summarize(results)
    assert summary.graphs == 11  # 1 + 2 + 8 labeled graphs
    assert summary.checks_run == 88
    assert summary.failures == 0 and summary.skipped == 0
    assert summary.ok
    for kind, payload in results:
        assert kind == "report"
        jsonschema.validate(payload, REPORT_SCHEMA)


def test_verify_stream_skips_junk_and_oversized_lines(tree6):
    big = emit_graph6(Graph.from_edges(13, []))
    lines = ["EpG_", "not-a-graph", big, "", "   "]
    results = list(verify_stream(lines, checks=["ke_predicate"]))
    assert [kind for kind, _ in results] == ["report", "skip", "skip"]
    assert "adjacency bytes" in results[1][1]["reason"]
    assert "> 12 vertices" in results[2][1]["reason"]
    summary = summarize(results)
    assert summary.graphs == 1 and summary.skipped == 2


def test_verify_stream_force_processes_oversized_lines():
    big = emit_graph6(Graph.from_edges(13, []))
    results = list(verify_stream([big], checks=["ke_predicate"], force=True))
    assert results[0][0] == "report"
    assert results[0][1]["checks"][0]["pass"] is True


def test_parallel_stream_matches_serial():
    lines = list(enumeration_lines(3))
    checks = ["inclusion_chain", "ke_predicate"]

    def scrub(results):
        out = []
        for kind, payload in results:
            payload = dict(payload)
            payload.pop("elapsed_ms", None)
            out.append((kind, payload))
        return out

    serial = scrub(verify_stream(lines, checks=checks, jobs=1))
    parallel = scrub(verify_stream(lines, checks=checks, jobs=2))
    assert serial == parallel


def test_verify_stream_reports_failures_from_the_registry(tree6, monkeypatch):
    def always_fail(ctx):
        return CheckOutcome("always_fail", False, counterexample={"why": "test"})

    monkeypatch.setitem(CHECK_REGISTRY, "always_fail", always_fail)
    results = list(verify_stream(["EpG_", "Bw"], checks=["always_fail"]))
    summary = summarize(results)
    assert summary.graphs == 2
    assert summary.failures == 2
    assert summary.failed_graphs == ["EpG_", "Bw"]
    assert not summary.ok


def test_run_summary_render_format():
    summary = RunSummary(graphs=11, checks_run=88, failures=0, skipped=1, elapsed_ms=1234.5)
    assert re.fullmatch(
        r"graphs=11 checks=88 failures=0 skipped=1 elapsed=1\.2s", summary.render()
    )
    assert summary.to_dict()["failed_graphs"] == []


# --------------------------------------------------------------------------
# enumeration


def test_enumeration_lines_counts_and_spot_values():
    lines = list(enumeration_lines(3))
    assert len(lines) == 11
    assert lines[0] == "@"
    assert lines[1] == "A?"
    assert lines[2] == "A_"
    assert len(set(lines)) == 11


def test_enumeration_lines_guardrail():
    with pytest.raises(GuardrailExceeded):
        list(enumeration_lines(MAX_GUARDRAIL_N + 1))
    forced = enumeration_lines(MAX_GUARDRAIL_N + 1, force=True)
    assert next(iter(forced)) == "@"


def test_enumeration_lines_match_four_vertex_count():
    assert sum(1 for _ in enumeration_lines(4)) == 11 + 64
