"""Closed-neighborhood decomposition around a local maximum independent set.

Deleting the closed neighborhood of a local maximum independent set S leaves
a remainder graph H with:

* ``alpha(G) = |S| + alpha(H)`` (the additive identity);
* ``T -> S ∪ T`` a bijection from the local maximum independent sets of H
  onto those of G that contain S;
* the maximum independent sets of G containing S being exactly
  ``S ∪ Q`` for maximum independent sets Q of H, so their intersection and
  union are S plus the core and corona of H.

Every derived family here is computed along BOTH routes — lifted from H and
filtered directly in G — and the report carries both, so a disagreement is
visible rather than silently collapsed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalContradiction
from .graphs import Graph, InducedSubgraph, VertexSet, delete_closed_neighborhood
from .independence import (
    FamilyKind,
    SetFamily,
    _owned,
    alpha_mask,
    enumerate_family,
    independent_masks,
    psi_mask_list,
    require_local_max,
)


@dataclass(frozen=True)
class DecompositionReport:
    """Everything the decomposition yields for one anchor set S, with each
    derived object computed both via the remainder graph and directly."""

    s: VertexSet
    remainder: InducedSubgraph
    alpha_g: int
    alpha_remainder: int
    psi_remainder: SetFamily
    psi_extensions: SetFamily
    psi_extensions_direct: SetFamily
    omega_extensions: SetFamily
    omega_extensions_direct: SetFamily
    core_s: VertexSet
    corona_s: VertexSet
    core_via_remainder: VertexSet
    corona_via_remainder: VertexSet
    bijection_ok: bool

    @property
    def additive_ok(self) -> bool:
        return self.alpha_g == len(self.s) + self.alpha_remainder

    @property
    def psi_routes_agree(self) -> bool:
        return self.psi_extensions.mask_set == self.psi_extensions_direct.mask_set

    @property
    def omega_routes_agree(self) -> bool:
        return self.omega_extensions.mask_set == self.omega_extensions_direct.mask_set

    @property
    def core_corona_ok(self) -> bool:
        return (
            self.core_s == self.core_via_remainder
            and self.corona_s == self.corona_via_remainder
        )

    @property
    def counts(self) -> tuple[int, int]:
        """(number of Psi extensions, number of Omega extensions)."""
        return (len(self.psi_extensions), len(self.omega_extensions))

    @property
    def problems(self) -> list[str]:
        out = []
        if not self.additive_ok:
            out.append(
                f"alpha(G)={self.alpha_g} but |S|+alpha(H)="
                f"{len(self.s)}+{self.alpha_remainder}"
                f"={len(self.s) + self.alpha_remainder}"
            )
        if not self.psi_routes_agree:
            out.append("lifted and direct Psi extensions differ")
        if not self.omega_routes_agree:
            out.append("lifted and direct Omega extensions differ")
        if not self.core_corona_ok:
            out.append("core/corona differ between the two routes")
        if not self.bijection_ok:
            out.append("T -> S ∪ T is not a bijection onto the extensions")
        return out

    @property
    def all_ok(self) -> bool:
        return not self.problems


def decompose_unchecked(
    graph: Graph,
    s: VertexSet,
    psi_g: SetFamily | None = None,
    omega_g: SetFamily | None = None,
) -> DecompositionReport:
    """Run the full decomposition without requiring S to be a local maximum
    independent set and without raising when identities fail.

    The report's ``problems`` list then shows exactly which identities break;
    for anchors that do satisfy the precondition, all of them hold.  The
    optional ``psi_g``/``omega_g`` arguments reuse precomputed global
    families; they never replace the per-route computations themselves.
    """
    _owned(graph, s)
    remainder = delete_closed_neighborhood(graph, s)
    inner = remainder.graph
    alpha_g = alpha_mask(graph.adj, graph.full_mask)
    alpha_remainder = alpha_mask(inner.adj, inner.full_mask)

    psi_remainder = enumerate_family(inner, FamilyKind.PSI)
    lifted_psi = tuple(
        VertexSet(graph, s.mask | remainder.lift_mask(q.mask)) for q in psi_remainder
    )
    psi_extensions = SetFamily(FamilyKind.PSI_EXTENSIONS, graph, lifted_psi, anchor=s)
    if psi_g is None:
        psi_g = enumerate_family(graph, FamilyKind.PSI)
    psi_extensions_direct = SetFamily(
        FamilyKind.PSI_EXTENSIONS,
        graph,
        tuple(u for u in psi_g if s.mask & ~u.mask == 0),
        anchor=s,
    )

    omega_remainder = enumerate_family(inner, FamilyKind.OMEGA)
    lifted_omega = tuple(
        VertexSet(graph, s.mask | remainder.lift_mask(q.mask)) for q in omega_remainder
    )
    omega_extensions = SetFamily(
        FamilyKind.OMEGA_EXTENSIONS, graph, lifted_omega, anchor=s
    )
    if omega_g is None:
        omega_g = enumerate_family(graph, FamilyKind.OMEGA)
    omega_extensions_direct = SetFamily(
        FamilyKind.OMEGA_EXTENSIONS,
        graph,
        tuple(u for u in omega_g if s.mask & ~u.mask == 0),
        anchor=s,
    )

    core_mask = graph.full_mask if len(omega_extensions_direct) else 0
    corona_mask = 0
    for member in omega_extensions_direct:
        core_mask &= member.mask
        corona_mask |= member.mask
    inner_core = inner.full_mask if len(omega_remainder) else 0
    inner_corona = 0
    for member in omega_remainder:
        inner_core &= member.mask
        inner_corona |= member.mask

    remainder_vertices = remainder.lift_mask(inner.full_mask)
    lifted_q = {remainder.lift_mask(q.mask) for q in psi_remainder}
    bijection_ok = (
        len(lifted_q) == len(psi_remainder)
        and psi_extensions.mask_set == psi_extensions_direct.mask_set
        and all(
            (u.mask & ~s.mask) & ~remainder_vertices == 0
            and u.mask & ~s.mask in lifted_q
            for u in psi_extensions_direct
        )
    )

    return DecompositionReport(
        s=s,
        remainder=remainder,
        alpha_g=alpha_g,
        alpha_remainder=alpha_remainder,
        psi_remainder=psi_remainder,
        psi_extensions=psi_extensions,
        psi_extensions_direct=psi_extensions_direct,
        omega_extensions=omega_extensions,
        omega_extensions_direct=omega_extensions_direct,
        core_s=VertexSet(graph, core_mask),
        corona_s=VertexSet(graph, corona_mask),
        core_via_remainder=VertexSet(graph, s.mask | remainder.lift_mask(inner_core)),
        corona_via_remainder=VertexSet(
            graph, s.mask | remainder.lift_mask(inner_corona)
        ),
        bijection_ok=bijection_ok,
    )


def decompose(
    graph: Graph,
    s: VertexSet,
    psi_g: SetFamily | None = None,
    omega_g: SetFamily | None = None,
) -> DecompositionReport:
    """Decompose around a local maximum independent set S and verify every
    identity along both routes.

    Raises :class:`NotLocalMax` when S fails the precondition and
    :class:`InternalContradiction` if any identity fails for a valid S.
    """
    require_local_max(graph, s, "anchor")
    report = decompose_unchecked(graph, s, psi_g, omega_g)
    if not report.all_ok:
        raise InternalContradiction(
            "decomposition identities failed for a valid anchor: "
            + "; ".join(report.problems)
        )
    return report


def psi_extensions(
    graph: Graph, s: VertexSet, psi_g: SetFamily | None = None
) -> SetFamily:
    """The local maximum independent sets of G containing S, computed both by
    lifting from the remainder graph and by direct filtering; the routes must
    agree."""
    require_local_max(graph, s, "anchor")
    remainder = delete_closed_neighborhood(graph, s)
    lifted = tuple(
        VertexSet(graph, s.mask | remainder.lift_mask(q))
        for q in psi_mask_list(remainder.graph.adj, remainder.graph.n)
    )
    family = SetFamily(FamilyKind.PSI_EXTENSIONS, graph, lifted, anchor=s)
    if psi_g is None:
        psi_g = enumerate_family(graph, FamilyKind.PSI)
    direct = frozenset(u.mask for u in psi_g if s.mask & ~u.mask == 0)
    if family.mask_set != direct:
        raise InternalContradiction(
            "lifted and directly-filtered Psi extensions disagree"
        )
    return family


def omega_extensions(
    graph: Graph, s: VertexSet, omega_g: SetFamily | None = None
) -> SetFamily:
    """The maximum independent sets of G containing S, computed along both
    routes; the routes must agree."""
    require_local_max(graph, s, "anchor")
    remainder = delete_closed_neighborhood(graph, s)
    inner = remainder.graph
    best = alpha_mask(inner.adj, inner.full_mask)
    lifted = tuple(
        VertexSet(graph, s.mask | remainder.lift_mask(q))
        for q in independent_masks(inner.adj, inner.n)
        if q.bit_count() == best
    )
    family = SetFamily(FamilyKind.OMEGA_EXTENSIONS, graph, lifted, anchor=s)
    if omega_g is None:
        omega_g = enumerate_family(graph, FamilyKind.OMEGA)
    direct = frozenset(u.mask for u in omega_g if s.mask & ~u.mask == 0)
    if family.mask_set != direct:
        raise InternalContradiction(
            "lifted and directly-filtered Omega extensions disagree"
        )
    return family


def count_extensions(
    graph: Graph,
    s: VertexSet,
    psi_g: SetFamily | None = None,
    omega_g: SetFamily | None = None,
) -> tuple[int, int]:
    """(|Psi extensions of S|, |Omega extensions of S|).

    Counts are taken in the remainder graph and re-counted by direct
    filtering in G; a mismatch raises :class:`InternalContradiction`.
    """
    require_local_max(graph, s, "anchor")
    remainder = delete_closed_neighborhood(graph, s)
    inner = remainder.graph
    ind = independent_masks(inner.adj, inner.n)
    psi_count = len(psi_mask_list(inner.adj, inner.n, ind))
    best = alpha_mask(inner.adj, inner.full_mask)
    omega_count = sum(1 for q in ind if q.bit_count() == best)
    if psi_g is None:
        psi_g = enumerate_family(graph, FamilyKind.PSI)
    if omega_g is None:
        omega_g = enumerate_family(graph, FamilyKind.OMEGA)
    psi_direct = sum(1 for u in psi_g if s.mask & ~u.mask == 0)
    omega_direct = sum(1 for u in omega_g if s.mask & ~u.mask == 0)
    if (psi_count, omega_count) != (psi_direct, omega_direct):
        raise InternalContradiction(
            f"extension counts disagree: remainder route ({psi_count}, "
            f"{omega_count}) vs direct route ({psi_direct}, {omega_direct})"
        )
    return psi_count, omega_count
