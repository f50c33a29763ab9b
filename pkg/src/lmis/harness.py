"""Named verification checks and a runner that applies them to graph streams.

Every check takes a :class:`GraphContext` (which caches the per-graph family
enumerations the checks share) and returns a :class:`CheckOutcome`; failure is
data, never an exception.  The runner applies a selection of checks to each
graph of a stream — graph6 lines or an exhaustive enumeration — serially or
with worker processes, and reports one object per graph plus a summary.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import cached_property
from multiprocessing import get_context
from typing import Any, Callable, Iterable, Iterator

from .augmentation import check_canonical_augmentoid, lemma_pair_failure
from .decomposition import count_extensions, decompose_unchecked
from .errors import GuardrailExceeded, InternalContradiction, ParseError
from .graphs import (
    Graph,
    VertexSet,
    emit_graph6,
    enumerate_labeled_graphs,
    is_bipartite,
    parse_graph6,
)
from .independence import (
    FamilyKind,
    SetFamily,
    alpha_mask,
    critical_profile_masks,
    enumerate_family,
)
from .matching import max_matching
from .reporting import CheckOutcome, VerificationReport, set_payload

MAX_GUARDRAIL_N = 12


class GraphContext:
    """One graph plus lazily-computed shared material for the checks."""

    def __init__(self, graph: Graph):
        self.graph = graph

    @cached_property
    def alpha(self) -> int:
        return alpha_mask(self.graph.adj, self.graph.full_mask)

    @cached_property
    def mu(self) -> int:
        return len(max_matching(self.graph))

    @cached_property
    def psi(self) -> SetFamily:
        return enumerate_family(self.graph, FamilyKind.PSI)

    @cached_property
    def crown(self) -> SetFamily:
        return enumerate_family(self.graph, FamilyKind.CROWN)

    @cached_property
    def crit_indep(self) -> SetFamily:
        return enumerate_family(self.graph, FamilyKind.CRIT_INDEP)

    @cached_property
    def omega(self) -> SetFamily:
        return enumerate_family(self.graph, FamilyKind.OMEGA)

    @cached_property
    def critical_value(self) -> int:
        value, _ = critical_profile_masks(self.graph.adj, self.graph.n)
        return value


def _first_offender(family: SetFamily, allowed: frozenset[int]) -> VertexSet:
    for member in family:
        if member.mask not in allowed:
            return member
    raise AssertionError("no offender present")


def check_inclusion_chain(ctx: GraphContext) -> CheckOutcome:
    """Critical independent sets are crowns, and crowns are local maximum
    independent sets; each family is enumerated from its own definition."""
    crit, crown, psi = ctx.crit_indep, ctx.crown, ctx.psi
    name = "inclusion_chain"
    if not crit.mask_set <= crown.mask_set:
        offender = _first_offender(crit, crown.mask_set)
        return CheckOutcome(
            name,
            False,
            counterexample={
                "set": set_payload(offender),
                "violated": "CritIndep within Crown",
            },
        )
    if not crown.mask_set <= psi.mask_set:
        offender = _first_offender(crown, psi.mask_set)
        return CheckOutcome(
            name,
            False,
            counterexample={
                "set": set_payload(offender),
                "violated": "Crown within Psi",
            },
        )
    return CheckOutcome(
        name,
        True,
        certificate={
            "crit_indep": len(crit),
            "crown": len(crown),
            "psi": len(psi),
        },
    )


def check_augmentoid(ctx: GraphContext) -> CheckOutcome:
    """The canonical exchange stays inside the family of local maximum
    independent sets, with equal sizes, over every ordered pair."""
    verdict = check_canonical_augmentoid(ctx.graph, ctx.psi)
    if verdict.holds:
        return CheckOutcome(
            "canonical_augmentoid",
            True,
            certificate={"ordered_pairs": len(ctx.psi) ** 2},
        )
    first, second = verdict.counterexample
    return CheckOutcome(
        "canonical_augmentoid",
        False,
        counterexample={
            "s": set_payload(first),
            "t": set_payload(second),
            "diagnosis": verdict.diagnosis,
        },
    )


def check_lemmas_all_pairs(ctx: GraphContext) -> CheckOutcome:
    """The supporting lemma suite on every ordered pair of local maximum
    independent sets."""
    masks = [member.mask for member in ctx.psi.members]
    memo: dict[int, int] = {}
    for s_mask in masks:
        for t_mask in masks:
            failed = lemma_pair_failure(ctx.graph, s_mask, t_mask, memo)
            if failed is not None:
                return CheckOutcome(
                    "lemmas_all_pairs",
                    False,
                    counterexample={
                        "s": set_payload(VertexSet(ctx.graph, s_mask)),
                        "t": set_payload(VertexSet(ctx.graph, t_mask)),
                        "lemma": failed,
                    },
                )
    return CheckOutcome(
        "lemmas_all_pairs", True, certificate={"ordered_pairs": len(masks) ** 2}
    )


def check_decomposition_all_anchors(ctx: GraphContext) -> CheckOutcome:
    """The full decomposition report must be clean for every local maximum
    independent set used as the anchor."""
    for member in ctx.psi.members:
        report = decompose_unchecked(ctx.graph, member, ctx.psi, ctx.omega)
        if not report.all_ok:
            return CheckOutcome(
                "decomposition_all_S",
                False,
                counterexample={
                    "anchor": set_payload(member),
                    "problems": report.problems,
                },
            )
    return CheckOutcome(
        "decomposition_all_S", True, certificate={"anchors": len(ctx.psi)}
    )


def check_counting(ctx: GraphContext) -> CheckOutcome:
    """Extension counts taken in the remainder graph must equal the direct
    recount in the host graph, for every anchor."""
    total_psi = 0
    total_omega = 0
    for member in ctx.psi.members:
        try:
            psi_count, omega_count = count_extensions(
                ctx.graph, member, ctx.psi, ctx.omega
            )
        except InternalContradiction as exc:
            return CheckOutcome(
                "counting",
                False,
                counterexample={"anchor": set_payload(member), "error": str(exc)},
            )
        total_psi += psi_count
        total_omega += omega_count
    return CheckOutcome(
        "counting",
        True,
        certificate={
            "anchors": len(ctx.psi),
            "psi_extensions_total": total_psi,
            "omega_extensions_total": total_omega,
        },
    )


def check_ke_predicate(ctx: GraphContext) -> CheckOutcome:
    """alpha + mu = n exactly characterizes the predicate, and bipartite
    graphs always satisfy it."""
    bipartite = is_bipartite(ctx.graph)
    holds = ctx.alpha + ctx.mu == ctx.graph.n
    if bipartite and not holds:
        return CheckOutcome(
            "ke_predicate",
            False,
            counterexample={
                "alpha": ctx.alpha,
                "mu": ctx.mu,
                "n": ctx.graph.n,
                "problem": "bipartite graph without the alpha + mu = n identity",
            },
        )
    return CheckOutcome(
        "ke_predicate",
        True,
        certificate={
            "alpha": ctx.alpha,
            "mu": ctx.mu,
            "n": ctx.graph.n,
            "konig_egervary": holds,
            "bipartite": bipartite,
        },
    )


def check_pereyra_crosscheck(ctx: GraphContext) -> CheckOutcome:
    """Cross-check of an equivalence cited from prior work: the crown and
    critical families coincide exactly when the critical difference is 0."""
    families_equal = ctx.crit_indep.mask_set == ctx.crown.mask_set
    zero_difference = ctx.critical_value == 0
    passed = families_equal == zero_difference
    payload = {
        "families_equal": families_equal,
        "critical_difference": ctx.critical_value,
        "note": "cross-check of a cited equivalence",
    }
    if passed:
        return CheckOutcome("pereyra_crosscheck", True, certificate=payload)
    return CheckOutcome("pereyra_crosscheck", False, counterexample=payload)


def check_nt_extension(ctx: GraphContext) -> CheckOutcome:
    """Every local maximum independent set extends to a maximum one."""
    omega_masks = ctx.omega.mask_set
    for member in ctx.psi.members:
        if not any(member.mask & ~m == 0 for m in omega_masks):
            return CheckOutcome(
                "nt_extension",
                False,
                counterexample={"set": set_payload(member)},
            )
    return CheckOutcome(
        "nt_extension",
        True,
        certificate={"psi": len(ctx.psi), "omega": len(ctx.omega)},
    )


CHECK_REGISTRY: dict[str, Callable[[GraphContext], CheckOutcome]] = {
    "inclusion_chain": check_inclusion_chain,
    "canonical_augmentoid": check_augmentoid,
    "lemmas_all_pairs": check_lemmas_all_pairs,
    "decomposition_all_S": check_decomposition_all_anchors,
    "counting": check_counting,
    "ke_predicate": check_ke_predicate,
    "pereyra_crosscheck": check_pereyra_crosscheck,
    "nt_extension": check_nt_extension,
}


def resolve_checks(names: Iterable[str] | None) -> tuple[str, ...]:
    """Validate and order a check selection; None selects every check."""
    if names is None:
        return tuple(CHECK_REGISTRY)
    chosen = list(names)
    unknown = [name for name in chosen if name not in CHECK_REGISTRY]
    if unknown:
        raise ValueError(
            f"unknown checks: {', '.join(unknown)} "
            f"(available: {', '.join(CHECK_REGISTRY)})"
        )
    return tuple(name for name in CHECK_REGISTRY if name in chosen)


def run_checks(
    graph: Graph,
    checks: Iterable[str] | None = None,
    graph_id: str | None = None,
    force: bool = False,
) -> VerificationReport:
    """Apply the selected checks to one graph and collect a report."""
    if graph.n > MAX_GUARDRAIL_N and not force:
        raise GuardrailExceeded(
            f"graph has {graph.n} > {MAX_GUARDRAIL_N} vertices; "
            "family enumeration refused without force"
        )
    selected = resolve_checks(checks)
    start = time.perf_counter()
    ctx = GraphContext(graph)
    outcomes = [CHECK_REGISTRY[name](ctx) for name in selected]
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        graph_id=graph_id if graph_id is not None else emit_graph6(graph),
        n=graph.n,
        m=graph.m,
        checks=outcomes,
        elapsed_ms=elapsed_ms,
    )


@dataclass
class RunSummary:
    """Aggregate result of a verification run over a stream of graphs."""

    graphs: int = 0
    checks_run: int = 0
    failures: int = 0
    skipped: int = 0
    elapsed_ms: float = 0.0
    failed_graphs: list[str] = field(default_factory=list)

    def absorb(self, kind: str, payload: dict[str, Any]) -> None:
        if kind == "skip":
            self.skipped += 1
            return
        self.graphs += 1
        self.checks_run += len(payload["checks"])
        if any(not check["pass"] for check in payload["checks"]):
            self.failures += 1
            if len(self.failed_graphs) < 100:
                self.failed_graphs.append(payload["graph_id"])

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "graphs": self.graphs,
            "checks_run": self.checks_run,
            "failures": self.failures,
            "skipped": self.skipped,
            "elapsed_ms": self.elapsed_ms,
            "failed_graphs": self.failed_graphs,
        }

    def render(self) -> str:
        return (
            f"graphs={self.graphs} checks={self.checks_run} "
            f"failures={self.failures} skipped={self.skipped} "
            f"elapsed={self.elapsed_ms / 1000.0:.1f}s"
        )


def _verify_one(args: tuple[str, tuple[str, ...], bool]) -> tuple[str, dict[str, Any]]:
    line, checks, force = args
    try:
        graph = parse_graph6(line)
    except ParseError as exc:
        return "skip", {"line": line, "reason": str(exc)}
    if graph.n > MAX_GUARDRAIL_N and not force:
        return "skip", {
            "line": line,
            "reason": f"graph has {graph.n} > {MAX_GUARDRAIL_N} vertices",
        }
    report = run_checks(graph, checks, graph_id=line, force=force)
    return "report", report.to_dict()


def verify_stream(
    lines: Iterable[str],
    checks: Iterable[str] | None = None,
    jobs: int = 1,
    force: bool = False,
) -> Iterator[tuple[str, dict[str, Any]]]:
    """Run checks over graph6 lines, yielding ("report"|"skip", payload)
    pairs in input order.

    With ``jobs > 1`` the graphs are distributed over worker processes; the
    output order (and hence the summary) is identical to a serial run.
    """
    selected = resolve_checks(checks)
    stripped = (line.strip() for line in lines)
    items = ((line, selected, force) for line in stripped if line)
    if jobs <= 1:
        for item in items:
            yield _verify_one(item)
        return
    with get_context("fork").Pool(jobs) as pool:
        yield from pool.imap(_verify_one, items, chunksize=16)


def enumeration_lines(max_n: int, force: bool = False) -> Iterator[str]:
    """graph6 lines for every labeled graph with 1..max_n vertices."""
    if max_n > MAX_GUARDRAIL_N and not force:
        raise GuardrailExceeded(
            f"max_n={max_n} exceeds the guardrail of {MAX_GUARDRAIL_N}"
        )
    for n in range(1, max_n + 1):
        for graph in enumerate_labeled_graphs(n):
            yield emit_graph6(graph)
