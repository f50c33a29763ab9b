"""Command-line interface.

Subcommands:

* ``analyze``   — families, critical difference, and invariants of one graph.
* ``augment``   — the canonical exchange between two local maximum
                  independent sets, with the lemma checks.
* ``decompose`` — the closed-neighborhood decomposition around one set.
* ``verify``    — run named checks over a graph6 stream or an exhaustive
                  enumeration; exit 1 when any check fails.
* ``examples``  — rebuild the three worked examples and print their facts.

Exit codes: 0 success, 1 at least one verification check failed, 2 usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Any, Iterable

from . import examples
from .augmentation import canonical_augment, verify_lemmas
from .decomposition import DecompositionReport, decompose
from .errors import LmisError
from .graphs import Graph, VertexSet, emit_graph6, parse_edge_list, parse_graph6
from .harness import (
    CHECK_REGISTRY,
    RunSummary,
    enumeration_lines,
    run_checks,
    verify_stream,
)
from .independence import (
    FamilyKind,
    SetFamily,
    alpha,
    core_and_corona,
    critical_difference,
    diff,
    enumerate_family,
    is_konig_egervary,
)
from .matching import cross_matching, max_matching
from .reporting import set_payload


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_graph(args: argparse.Namespace) -> Graph:
    text = _read_text(args.input)
    if args.format == "edges":
        return parse_edge_list(text)
    for line in text.splitlines():
        if line.strip():
            return parse_graph6(line)
    return parse_graph6(text)


def _parse_set(graph: Graph, spec: str) -> VertexSet:
    items: list[int | str] = []
    for token in spec.split(","):
        token = token.strip()
        if not token:
            continue
        if graph.labels is not None and token in graph.labels:
            items.append(token)
        elif token.isdigit():
            items.append(int(token))
        else:
            items.append(token)
    return graph.vertex_set(items)


def _relation(left: frozenset[int], right: frozenset[int]) -> str:
    if left == right:
        return "="
    if left <= right:
        return "<"
    return "!<"


def _families(graph: Graph) -> dict[str, SetFamily]:
    return {
        kind.value: enumerate_family(graph, kind)
        for kind in (
            FamilyKind.OMEGA,
            FamilyKind.CRIT_INDEP,
            FamilyKind.CROWN,
            FamilyKind.PSI,
        )
    }


def _chain_line(families: dict[str, SetFamily]) -> str:
    crit = families["CritIndep"].mask_set
    crown = families["Crown"].mask_set
    psi = families["Psi"].mask_set
    return (
        f"chain: CritIndep {_relation(crit, crown)} Crown "
        f"{_relation(crown, psi)} Psi"
    )


def cmd_analyze(args: argparse.Namespace) -> int:
    graph = _load_graph(args)
    families = _families(graph)
    profile = critical_difference(graph)
    core, corona = core_and_corona(graph)
    a = alpha(graph)
    mu = len(max_matching(graph))
    ke = is_konig_egervary(graph)
    if args.json:
        payload: dict[str, Any] = {
            "graph_id": emit_graph6(graph),
            "n": graph.n,
            "m": graph.m,
            "alpha": a,
            "mu": mu,
            "konig_egervary": ke,
            "critical_difference": profile.difference,
            "critical_witness": set_payload(profile.witness),
            "core": set_payload(core),
            "corona": set_payload(corona),
            "families": {
                name: [set_payload(member) for member in family]
                for name, family in families.items()
            },
        }
        print(json.dumps(payload, separators=(",", ":")))
        return 0
    print(f"graph: n={graph.n} m={graph.m} id={emit_graph6(graph)}")
    print(f"alpha={a} mu={mu} konig_egervary={'yes' if ke else 'no'}")
    print(
        f"critical difference: d(G)={profile.difference} "
        f"witness={profile.witness.render()}"
    )
    print(f"core={core.render()} corona={corona.render()}")
    for name in ("Omega", "CritIndep", "Crown", "Psi"):
        family = families[name]
        print(f"{name} ({len(family)}): {family.render()}")
    print(_chain_line(families))
    return 0


def cmd_augment(args: argparse.Namespace) -> int:
    graph = _load_graph(args)
    s = _parse_set(graph, args.s)
    t = _parse_set(graph, args.t)
    result = canonical_augment(graph, s, t)
    matching = cross_matching(graph, s, t)
    report = verify_lemmas(graph, s, t)
    if args.json:
        payload = {
            "s": set_payload(result.s),
            "t": set_payload(result.t),
            "s_outside": set_payload(result.s_outside),
            "t_outside": set_payload(result.t_outside),
            "s_augmented": set_payload(result.s_augmented),
            "t_augmented": set_payload(result.t_augmented),
            "common_size": result.common_size,
            "cross_matching": [list(pair) for pair in matching.pairs],
            "lemmas": report.to_dict(),
        }
        print(json.dumps(payload, separators=(",", ":")))
        return 0
    print(f"S  = {result.s.render()}")
    print(f"T  = {result.t.render()}")
    print(f"S \\ N[T] = {result.s_outside.render()}   donated to T")
    print(f"T \\ N[S] = {result.t_outside.render()}   donated to S")
    print(f"S+ = {result.s_augmented.render()}")
    print(f"T+ = {result.t_augmented.render()}")
    print(f"|S+| = |T+| = {result.common_size}")
    print(f"cross matching: {matching.render() or '(empty)'}")
    print("lemma checks:")
    for check in report.checks:
        print(f"  {check.name}: {'pass' if check.passed else 'FAIL'}")
    return 0 if report.all_passed else 1


def _decomposition_lines(report: DecompositionReport) -> list[str]:
    remainder = report.remainder
    inner_vertices = VertexSet(
        report.s.graph, remainder.lift_mask(remainder.graph.full_mask)
    )
    lines = [
        f"S = {report.s.render()}",
        (
            f"remainder graph (after deleting N[S]): vertices={inner_vertices.render()} "
            f"n={remainder.n} m={remainder.graph.m}"
        ),
        (
            f"alpha: {report.alpha_g} = {len(report.s)} + {report.alpha_remainder} "
            f"(alpha(G) = |S| + alpha of the remainder): "
            f"{'ok' if report.additive_ok else 'MISMATCH'}"
        ),
        (
            f"Psi extensions ({len(report.psi_extensions)}): "
            f"{report.psi_extensions.render()}"
        ),
        (
            f"Omega extensions ({len(report.omega_extensions)}): "
            f"{report.omega_extensions.render()}"
        ),
        f"core(S)={report.core_s.render()} corona(S)={report.corona_s.render()}",
        (
            "routes agree: "
            f"psi={'yes' if report.psi_routes_agree else 'NO'} "
            f"omega={'yes' if report.omega_routes_agree else 'NO'} "
            f"core/corona={'yes' if report.core_corona_ok else 'NO'} "
            f"bijection={'yes' if report.bijection_ok else 'NO'}"
        ),
        f"counts: psi={report.counts[0]} omega={report.counts[1]}",
    ]
    return lines


def _decomposition_payload(report: DecompositionReport) -> dict[str, Any]:
    return {
        "s": set_payload(report.s),
        "remainder_vertices": set_payload(
            VertexSet(
                report.s.graph,
                report.remainder.lift_mask(report.remainder.graph.full_mask),
            )
        ),
        "alpha_g": report.alpha_g,
        "alpha_remainder": report.alpha_remainder,
        "additive_ok": report.additive_ok,
        "psi_extensions": [set_payload(u) for u in report.psi_extensions],
        "omega_extensions": [set_payload(u) for u in report.omega_extensions],
        "core": set_payload(report.core_s),
        "corona": set_payload(report.corona_s),
        "psi_routes_agree": report.psi_routes_agree,
        "omega_routes_agree": report.omega_routes_agree,
        "core_corona_ok": report.core_corona_ok,
        "bijection_ok": report.bijection_ok,
        "counts": list(report.counts),
    }


def cmd_decompose(args: argparse.Namespace) -> int:
    graph = _load_graph(args)
    s = _parse_set(graph, args.s)
    report = decompose(graph, s)
    if args.json:
        print(json.dumps(_decomposition_payload(report), separators=(",", ":")))
        return 0
    for line in _decomposition_lines(report):
        print(line)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if (args.max_n is None) == (args.input is None):
        print("error: choose exactly one of --input or --max-n", file=sys.stderr)
        return 2
    checks = [c.strip() for c in args.checks.split(",")] if args.checks else None
    start = time.perf_counter()
    if args.max_n is not None:
        lines: Iterable[str] = enumeration_lines(args.max_n, args.force)
    else:
        lines = _read_text(args.input).splitlines()
    summary = RunSummary()
    side = sys.stderr if args.json else sys.stdout
    for kind, payload in verify_stream(lines, checks, jobs=args.jobs, force=args.force):
        summary.absorb(kind, payload)
        if kind == "skip":
            print(f"skip: {payload['reason']} [{payload['line'][:60]}]", file=side)
            continue
        if args.json:
            print(json.dumps(payload, separators=(",", ":")))
        else:
            failed = [c for c in payload["checks"] if not c["pass"]]
            if failed:
                detail = "; ".join(
                    f"{c['name']} {json.dumps(c['counterexample'], separators=(',', ':'))}"
                    for c in failed
                )
                print(f"FAIL {payload['graph_id']}: {detail}")
    summary.elapsed_ms = (time.perf_counter() - start) * 1000.0
    print(f"summary: {summary.render()}", file=side)
    return 0 if summary.ok else 1


def examples_text() -> str:
    """The full deterministic output of the ``examples`` subcommand."""
    out: list[str] = []

    graph = examples.star()
    families = _families(graph)
    leaves = graph.vertex_set(["a", "b", "c"])
    out.append("== example: star ==")
    out.append("edges: x-a x-b x-c")
    out.append(
        f"alpha={alpha(graph)} mu={len(max_matching(graph))} "
        f"konig_egervary={'yes' if is_konig_egervary(graph) else 'no'}"
    )
    boundary = len(leaves) - diff(graph, leaves)
    out.append(
        f"d({leaves.render()}) = |X| - |N(X)| = {len(leaves)} - {boundary} "
        f"= {diff(graph, leaves)}"
    )
    profile = critical_difference(graph)
    out.append(
        f"critical difference: d(G)={profile.difference} "
        f"witness={profile.witness.render()}"
    )
    for name in ("CritIndep", "Crown", "Psi"):
        out.append(f"{name} ({len(families[name])}): {families[name].render()}")
    out.append(_chain_line(families))
    out.append("")

    graph = examples.triangle_pendant()
    families = _families(graph)
    core, corona = core_and_corona(graph)
    profile = critical_difference(graph)
    out.append("== example: triangle with pendant ==")
    out.append("edges: a-b b-c c-a b-d")
    out.append(
        f"alpha={alpha(graph)} mu={len(max_matching(graph))} "
        f"konig_egervary={'yes' if is_konig_egervary(graph) else 'no'}"
    )
    out.append(
        f"critical difference: d(G)={profile.difference} "
        f"witness={profile.witness.render()}"
    )
    out.append(f"Omega ({len(families['Omega'])}): {families['Omega'].render()}")
    out.append(f"core={core.render()} corona={corona.render()}")
    for name in ("CritIndep", "Crown", "Psi"):
        out.append(f"{name} ({len(families[name])}): {families[name].render()}")
    out.append(_chain_line(families))
    psi_minus_crown = [
        member.render()
        for member in families["Psi"]
        if member.mask not in families["Crown"].mask_set
    ]
    out.append(f"Psi minus Crown: {' '.join(psi_minus_crown)}")
    out.append("")

    graph = examples.six_vertex_tree()
    families = _families(graph)
    core, corona = core_and_corona(graph)
    out.append("== example: six-vertex tree ==")
    out.append("edges: a-b a-c c-d c-e c-f")
    out.append(f"alpha={alpha(graph)}")
    out.append(f"Omega ({len(families['Omega'])}): {families['Omega'].render()}")
    out.append(f"core={core.render()} corona={corona.render()}")
    s = graph.vertex_set(["a", "d", "e"])
    t = graph.vertex_set(["b", "d", "f"])
    result = canonical_augment(graph, s, t)
    matching = cross_matching(graph, s, t)
    out.append(f"S  = {result.s.render()}")
    out.append(f"T  = {result.t.render()}")
    out.append(f"S \\ N[T] = {result.s_outside.render()}   donated to T")
    out.append(f"T \\ N[S] = {result.t_outside.render()}   donated to S")
    out.append(f"S+ = {result.s_augmented.render()}")
    out.append(f"T+ = {result.t_augmented.render()}")
    out.append(f"|S+| = |T+| = {result.common_size}")
    out.append(f"cross matching: {matching.render()}")
    report = decompose(graph, s)
    out.append(
        f"decomposition at S: alpha {report.alpha_g} = {len(report.s)} + "
        f"{report.alpha_remainder}; psi extensions={report.counts[0]} "
        f"omega extensions={report.counts[1]}"
    )
    return "\n".join(out) + "\n"


def cmd_examples(args: argparse.Namespace) -> int:
    sys.stdout.write(examples_text())
    return 0


def _add_input_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", required=True, help="path to the graph, or - for stdin")
    sub.add_argument(
        "--format",
        choices=("graph6", "edges"),
        default="graph6",
        help="input format (default graph6)",
    )
    sub.add_argument("--json", action="store_true", help="emit JSON instead of text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lmis",
        description="Local maximum independent sets: families, exchange "
        "augmentation, decomposition, and verification checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="families and invariants of one graph")
    _add_input_flags(p_analyze)
    p_analyze.set_defaults(func=cmd_analyze)

    p_augment = sub.add_parser("augment", help="canonical exchange between two sets")
    _add_input_flags(p_augment)
    p_augment.add_argument("--s", required=True, help="first set: comma-separated vertices")
    p_augment.add_argument("--t", required=True, help="second set: comma-separated vertices")
    p_augment.set_defaults(func=cmd_augment)

    p_decompose = sub.add_parser(
        "decompose", help="closed-neighborhood decomposition around one set"
    )
    _add_input_flags(p_decompose)
    p_decompose.add_argument("--s", required=True, help="anchor set: comma-separated vertices")
    p_decompose.set_defaults(func=cmd_decompose)

    p_verify = sub.add_parser("verify", help="run checks over many graphs")
    p_verify.add_argument("--input", help="graph6 lines (path or -)")
    p_verify.add_argument(
        "--max-n",
        type=int,
        dest="max_n",
        help="verify every labeled graph with 1..max_n vertices",
    )
    p_verify.add_argument(
        "--checks",
        help="comma-separated check names (default: all); available: "
        + ", ".join(CHECK_REGISTRY),
    )
    p_verify.add_argument("--json", action="store_true", help="one JSON report per graph")
    p_verify.add_argument("--jobs", type=int, default=1, help="worker processes")
    p_verify.add_argument(
        "--force",
        action="store_true",
        help="lift the vertex-count guardrail on enumeration and streams",
    )
    p_verify.set_defaults(func=cmd_verify)

    p_examples = sub.add_parser("examples", help="print the three worked examples")
    p_examples.set_defaults(func=cmd_examples)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return 1
    except (LmisError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
