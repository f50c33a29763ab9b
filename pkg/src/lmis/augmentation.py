"""Exchange augmentation between local maximum independent sets.

For two local maximum independent sets S and T, the vertices each set owns
outside the other's closed neighborhood can always be donated to the other
side: S ∪ (T \\ N[S]) and T ∪ (S \\ N[T]) are again local maximum independent
sets, and they have the same size.  This module builds that augmentation,
checks the exchange property over whole families, and verifies the supporting
lemmas on concrete pairs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .errors import FamilyEmpty, ForeignSet, InternalContradiction
from .graphs import Graph, VertexSet, _mask_bits, emit_graph6, neighborhood_mask
from .independence import (
    FamilyKind,
    SetFamily,
    _closed_mask,
    alpha_mask,
    enumerate_family,
    local_max_mask,
    require_local_max,
)
from .matching import _hopcroft_karp, cross_matching
from .reporting import CheckOutcome, VerificationReport, set_payload, vertex_payload


@dataclass(frozen=True)
class AugmentationResult:
    """The canonical exchange between two local maximum independent sets.

    ``s_outside`` is S \\ N[T] (donated to T); ``t_outside`` is T \\ N[S]
    (donated to S); the augmented sets share ``common_size``.
    """

    s: VertexSet
    t: VertexSet
    s_outside: VertexSet
    t_outside: VertexSet
    s_augmented: VertexSet
    t_augmented: VertexSet
    common_size: int


@dataclass(frozen=True)
class AugmentoidVerdict:
    """Whether an exchange property holds over a family; on failure, the
    first offending ordered pair in canonical order plus a diagnosis."""

    holds: bool
    counterexample: tuple[VertexSet, VertexSet] | None = None
    diagnosis: str | None = None


def _owned(graph: Graph, subset: VertexSet) -> None:
    if subset.graph is not graph:
        raise ForeignSet("vertex set belongs to a different graph object")


def canonical_augment(graph: Graph, s: VertexSet, t: VertexSet) -> AugmentationResult:
    """Donate T \\ N[S] to S and S \\ N[T] to T, verifying the postconditions.

    Raises :class:`NotLocalMax` if either input fails its precondition and
    :class:`InternalContradiction` if a guaranteed postcondition breaks
    (which would mean a bug, not bad input).
    """
    _owned(graph, s)
    _owned(graph, t)
    require_local_max(graph, s, "first")
    require_local_max(graph, t, "second")
    adj = graph.adj
    closed_s = _closed_mask(adj, s.mask)
    closed_t = _closed_mask(adj, t.mask)
    a_mask = s.mask & ~closed_t
    b_mask = t.mask & ~closed_s
    s_plus = s.mask | b_mask
    t_plus = t.mask | a_mask
    for name, plus in (("augmented first", s_plus), ("augmented second", t_plus)):
        if not local_max_mask(adj, plus):
            raise InternalContradiction(
                f"the {name} set is not a local maximum independent set"
            )
    if s_plus.bit_count() != t_plus.bit_count():
        raise InternalContradiction("augmented sets differ in size")
    return AugmentationResult(
        s=s,
        t=t,
        s_outside=VertexSet(graph, a_mask),
        t_outside=VertexSet(graph, b_mask),
        s_augmented=VertexSet(graph, s_plus),
        t_augmented=VertexSet(graph, t_plus),
        common_size=s_plus.bit_count(),
    )


def check_canonical_augmentoid(graph: Graph, psi: SetFamily | None = None) -> AugmentoidVerdict:
    """Run the canonical exchange over every ordered pair of the family of
    local maximum independent sets and verify membership and size equality."""
    if psi is None:
        psi = enumerate_family(graph, FamilyKind.PSI)
    adj = graph.adj
    masks = [member.mask for member in psi.members]
    mask_set = psi.mask_set
    closed = {m: _closed_mask(adj, m) for m in masks}
    for sm in masks:
        for tm in masks:
            a_mask = sm & ~closed[tm]
            b_mask = tm & ~closed[sm]
            s_plus = sm | b_mask
            t_plus = tm | a_mask
            problems = []
            if s_plus not in mask_set:
                problems.append("augmented first set left the family")
            if t_plus not in mask_set:
                problems.append("augmented second set left the family")
            if s_plus.bit_count() != t_plus.bit_count():
                problems.append("augmented sets differ in size")
            if problems:
                return AugmentoidVerdict(
                    holds=False,
                    counterexample=(VertexSet(graph, sm), VertexSet(graph, tm)),
                    diagnosis="; ".join(problems),
                )
    return AugmentoidVerdict(holds=True)


def check_generic_augmentoid(family: SetFamily) -> AugmentoidVerdict:
    """Check the raw exchange property on an arbitrary non-empty family:
    for every ordered pair (X, Y) there are A ⊆ X \\ Y and B ⊆ Y \\ X with
    Y ∪ A and X ∪ B both in the family and of equal size.

    The search collects the feasible sizes of Y ∪ A first and then scans the
    B side smallest-first, filtering on size before membership.
    """
    if not len(family):
        raise FamilyEmpty("the exchange property is vacuous on an empty family")
    masks = [member.mask for member in family.members]
    mask_set = family.mask_set
    for xm in masks:
        for ym in masks:
            donate_x = xm & ~ym
            donate_y = ym & ~xm
            feasible_sizes = set()
            sub = donate_x
            while True:
                grown = ym | sub
                if grown in mask_set:
                    feasible_sizes.add(grown.bit_count())
                if sub == 0:
                    break
                sub = (sub - 1) & donate_x
            found = False
            sub = donate_y
            while True:
                grown = xm | sub
                if grown.bit_count() in feasible_sizes and grown in mask_set:
                    found = True
                    break
                if sub == 0:
                    break
                sub = (sub - 1) & donate_y
            if not found:
                return AugmentoidVerdict(
                    holds=False,
                    counterexample=(
                        VertexSet(family.graph, xm),
                        VertexSet(family.graph, ym),
                    ),
                    diagnosis="no equal-size augmentation pair exists",
                )
    return AugmentoidVerdict(holds=True)


def lemma_pair_failure(
    graph: Graph,
    s_mask: int,
    t_mask: int,
    alpha_memo: dict[int, int] | None = None,
) -> str | None:
    """Mask-level lemma suite for one ordered pair of local maximum
    independent sets; returns the name of the first failing lemma, or None.

    Used by the harness over all pairs, where building full reports per pair
    would dominate the runtime.
    """
    adj = graph.adj
    full = graph.full_mask
    ns = neighborhood_mask(graph, s_mask)
    nt = neighborhood_mask(graph, t_mask)
    cross_s = s_mask & nt
    cross_t = t_mask & ns
    if cross_s.bit_count() != cross_t.bit_count():
        return "cross_matching"
    match = _hopcroft_karp(adj, cross_t, s_mask & ~t_mask)
    partners = 0
    for y, p in match.items():
        if cross_t >> y & 1:
            partners |= 1 << p
    if any(y not in match for y in _mask_bits(cross_t)) or partners != cross_s:
        return "cross_matching"
    reverse = _hopcroft_karp(adj, cross_s, t_mask & ~s_mask)
    if any(x not in reverse for x in _mask_bits(cross_s)):
        return "cross_matching"
    for inner, closed_outer in (
        (t_mask, s_mask | ns),
        (s_mask, t_mask | nt),
    ):
        rest = full & ~closed_outer
        outside = inner & rest
        pool = (outside | neighborhood_mask(graph, outside)) & rest
        if outside.bit_count() != _memo_alpha(adj, pool, alpha_memo):
            return "outside_membership"
    s_plus = s_mask | (t_mask & ~(s_mask | ns))
    t_plus = t_mask | (s_mask & ~(t_mask | nt))
    for plus in (s_plus, t_plus):
        closed = plus | neighborhood_mask(graph, plus)
        if plus.bit_count() != _memo_alpha(adj, closed, alpha_memo):
            return "plus_membership"
    shared = (s_mask & t_mask).bit_count()
    a_count = (s_mask & ~(t_mask | nt)).bit_count()
    b_count = (t_mask & ~(s_mask | ns)).bit_count()
    if s_plus.bit_count() != t_plus.bit_count():
        return "same_size"
    if s_plus.bit_count() != shared + cross_s.bit_count() + a_count + b_count:
        return "same_size"
    return None


def _memo_alpha(adj: tuple[int, ...], pool: int, memo: dict[int, int] | None) -> int:
    if memo is None:
        return alpha_mask(adj, pool)
    value = memo.get(pool, -1)
    if value < 0:
        value = alpha_mask(adj, pool)
        memo[pool] = value
    return value


def verify_lemmas(graph: Graph, s: VertexSet, t: VertexSet) -> VerificationReport:
    """Verify the supporting lemmas on one pair of local maximum independent
    sets, returning a full report with certificates.

    Checks: the perfect matching between the crossing parts S ∩ N(T) and
    T ∩ N(S); membership of each set minus the other's closed neighborhood in
    the family of the reduced graph; membership of both augmented sets; and
    the size bookkeeping that makes the augmented sizes equal.
    """
    _owned(graph, s)
    _owned(graph, t)
    require_local_max(graph, s, "first")
    require_local_max(graph, t, "second")
    start = time.perf_counter()
    adj = graph.adj
    checks: list[CheckOutcome] = []
    ns = neighborhood_mask(graph, s.mask)
    nt = neighborhood_mask(graph, t.mask)
    cross_s = VertexSet(graph, s.mask & nt)
    cross_t = VertexSet(graph, t.mask & ns)

    try:
        matching = cross_matching(graph, s, t)
        covered = matching.covered().mask
        ok = (
            covered == cross_s.mask | cross_t.mask
            and len(matching) == len(cross_s) == len(cross_t)
        )
        checks.append(
            CheckOutcome(
                "cross_matching",
                ok,
                certificate={
                    "s_cross": set_payload(cross_s),
                    "t_cross": set_payload(cross_t),
                    "matching": [
                        [vertex_payload(graph, u), vertex_payload(graph, v)]
                        for u, v in matching.pairs
                    ],
                },
            )
        )
    except InternalContradiction as exc:
        checks.append(
            CheckOutcome("cross_matching", False, counterexample={"error": str(exc)})
        )

    outside_cert: dict[str, object] = {}
    outside_ok = True
    for tag, inner, closed_outer in (
        ("t_minus", t.mask, s.mask | ns),
        ("s_minus", s.mask, t.mask | nt),
    ):
        rest = graph.full_mask & ~closed_outer
        outside = inner & rest
        pool = (outside | neighborhood_mask(graph, outside)) & rest
        supported = alpha_mask(adj, pool)
        member_ok = outside.bit_count() == supported
        outside_ok = outside_ok and member_ok
        outside_cert[tag] = {
            "set": set_payload(VertexSet(graph, outside)),
            "supported_size": supported,
            "local_max_in_remainder": member_ok,
        }
    checks.append(CheckOutcome("outside_membership", outside_ok, certificate=outside_cert))

    s_plus = VertexSet(graph, s.mask | (t.mask & ~(s.mask | ns)))
    t_plus = VertexSet(graph, t.mask | (s.mask & ~(t.mask | nt)))
    plus_ok = local_max_mask(adj, s_plus.mask) and local_max_mask(adj, t_plus.mask)
    checks.append(
        CheckOutcome(
            "plus_membership",
            plus_ok,
            certificate={
                "s_augmented": set_payload(s_plus),
                "t_augmented": set_payload(t_plus),
            },
        )
    )

    shared = len(s & t)
    a_count = len(s) - len(s & t) - len(cross_s)
    b_count = len(t) - len(s & t) - len(cross_t)
    sizes_ok = (
        len(s_plus) == len(t_plus)
        and len(s_plus) == shared + len(cross_s) + a_count + b_count
        and len(cross_s) == len(cross_t)
    )
    checks.append(
        CheckOutcome(
            "same_size",
            sizes_ok,
            certificate={
                "s_augmented_size": len(s_plus),
                "t_augmented_size": len(t_plus),
                "shared": shared,
                "crossing": len(cross_s),
                "s_donates": a_count,
                "t_donates": b_count,
            },
        )
    )

    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return VerificationReport(
        graph_id=emit_graph6(graph),
        n=graph.n,
        m=graph.m,
        checks=checks,
        elapsed_ms=elapsed_ms,
    )
