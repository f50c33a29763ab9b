"""Independent sets and the set families built from them.

The families of interest, each enumerable for small graphs:

* ``Omega``     — maximum independent sets.
* ``Psi``       — local maximum independent sets: S is a maximum independent
                  set of the subgraph induced on its own closed neighborhood.
* ``Crown``     — independent S whose open neighborhood can be matched
                  one-to-one into S.
* ``CritIndep`` — independent S whose difference |S| - |N(S)| attains the
                  critical difference of the whole graph.

Families are kept in a canonical order: by cardinality, then lexicographically
by the ascending member tuple, so all output is deterministic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator

from .errors import ForeignSet, NotLocalMax
from .graphs import Graph, VertexSet, _mask_bits, neighborhood_mask
from .matching import max_matching, saturating_matching


class FamilyKind(enum.Enum):
    OMEGA = "Omega"
    PSI = "Psi"
    CROWN = "Crown"
    CRIT_INDEP = "CritIndep"
    PSI_EXTENSIONS = "PsiExtensions"
    OMEGA_EXTENSIONS = "OmegaExtensions"


_GLOBAL_KINDS = (
    FamilyKind.OMEGA,
    FamilyKind.PSI,
    FamilyKind.CROWN,
    FamilyKind.CRIT_INDEP,
)


def _canonical_key(subset: VertexSet) -> tuple[int, tuple[int, ...]]:
    return (len(subset), subset.members)


@dataclass(frozen=True)
class SetFamily:
    """An ordered family of vertex sets of one graph.

    ``anchor`` is only present for extension families: the set every member
    must contain.
    """

    kind: FamilyKind
    graph: Graph
    members: tuple[VertexSet, ...]
    anchor: VertexSet | None = None

    def __post_init__(self) -> None:
        for subset in self.members:
            if subset.graph is not self.graph:
                raise ForeignSet("family member belongs to a different graph")
        ordered = tuple(sorted(self.members, key=_canonical_key))
        object.__setattr__(self, "members", ordered)

    @cached_property
    def mask_set(self) -> frozenset[int]:
        return frozenset(subset.mask for subset in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.members)

    def __contains__(self, subset: VertexSet) -> bool:
        return subset.graph is self.graph and subset.mask in self.mask_set

    def render(self) -> str:
        if not self.members:
            return "(none)"
        return " ".join(subset.render() for subset in self.members)


@dataclass(frozen=True)
class CriticalProfile:
    """The critical difference of a graph together with a set attaining it."""

    difference: int
    witness: VertexSet


# --------------------------------------------------------------------------
# mask-level engines


def _is_independent_mask(adj: tuple[int, ...], mask: int) -> bool:
    remaining = mask
    while remaining:
        low = remaining & -remaining
        if adj[low.bit_length() - 1] & mask:
            return False
        remaining ^= low
    return True


def alpha_mask(adj: tuple[int, ...], candidates: int) -> int:
    """Independence number of the subgraph induced on ``candidates``.

    Branch and bound: greedy degree-0/1 reductions, a greedy clique-cover
    upper bound for pruning, and branching on a maximum-degree vertex.
    """
    best = 0

    def cover_bound(pool: int) -> int:
        count = 0
        while pool:
            low = pool & -pool
            clique = low
            common = adj[low.bit_length() - 1] & pool
            while common:
                ulow = common & -common
                clique |= ulow
                common &= adj[ulow.bit_length() - 1]
            pool &= ~clique
            count += 1
        return count

    def search(pool: int, size: int) -> None:
        nonlocal best
        while True:
            changed = False
            scan = pool
            while scan:
                low = scan & -scan
                scan ^= low
                if not pool & low:
                    continue
                nbrs = adj[low.bit_length() - 1] & pool
                if nbrs == 0:
                    pool ^= low
                    size += 1
                    changed = True
                elif nbrs & (nbrs - 1) == 0:
                    pool &= ~(low | nbrs)
                    size += 1
                    changed = True
            if not changed:
                break
        if size > best:
            best = size
        if not pool or size + cover_bound(pool) <= best:
            return
        pivot, degree = -1, -1
        scan = pool
        while scan:
            low = scan & -scan
            scan ^= low
            v = low.bit_length() - 1
            d = (adj[v] & pool).bit_count()
            if d > degree:
                pivot, degree = v, d
        search(pool & ~(1 << pivot | adj[pivot]), size + 1)
        search(pool & ~(1 << pivot), size)

    search(candidates, 0)
    return best


def independent_masks(adj: tuple[int, ...], n: int) -> list[int]:
    """All independent subsets, as masks, in no particular order."""
    out: list[int] = []

    def recurse(v: int, chosen: int, banned: int) -> None:
        if v == n:
            out.append(chosen)
            return
        recurse(v + 1, chosen, banned)
        if not banned >> v & 1:
            recurse(v + 1, chosen | 1 << v, banned | adj[v])

    recurse(0, 0, 0)
    return out


def _closed_mask(adj: tuple[int, ...], mask: int) -> int:
    out = mask
    remaining = mask
    while remaining:
        low = remaining & -remaining
        out |= adj[low.bit_length() - 1]
        remaining ^= low
    return out


def local_max_mask(
    adj: tuple[int, ...], mask: int, alpha_memo: dict[int, int] | None = None
) -> bool:
    """Mask-level test that an independent set is a local maximum one."""
    if not _is_independent_mask(adj, mask):
        return False
    closed = _closed_mask(adj, mask)
    if alpha_memo is None:
        local_alpha = alpha_mask(adj, closed)
    else:
        local_alpha = alpha_memo.get(closed, -1)
        if local_alpha < 0:
            local_alpha = alpha_mask(adj, closed)
            alpha_memo[closed] = local_alpha
    return mask.bit_count() == local_alpha


def psi_mask_list(
    adj: tuple[int, ...], n: int, ind_masks: list[int] | None = None
) -> list[int]:
    """Masks of all local maximum independent sets."""
    if ind_masks is None:
        ind_masks = independent_masks(adj, n)
    memo: dict[int, int] = {}
    return [m for m in ind_masks if local_max_mask(adj, m, memo)]


def critical_profile_masks(adj: tuple[int, ...], n: int) -> tuple[int, int]:
    """(critical difference, witness mask); the witness is the canonically
    first subset attaining the maximum of |X| - |N(X)| over all subsets.
    """
    best = None
    witness = 0
    for mask in range(1 << n):
        d = mask.bit_count() - neighborhood_count(adj, mask)
        if best is None or d > best:
            best, witness = d, mask
        elif d == best and _mask_key(mask) < _mask_key(witness):
            witness = mask
    return best if best is not None else 0, witness


def neighborhood_count(adj: tuple[int, ...], mask: int) -> int:
    out = 0
    remaining = mask
    while remaining:
        low = remaining & -remaining
        out |= adj[low.bit_length() - 1]
        remaining ^= low
    return out.bit_count()


def _mask_key(mask: int) -> tuple[int, tuple[int, ...]]:
    return (mask.bit_count(), tuple(_mask_bits(mask)))


# --------------------------------------------------------------------------
# public graph-level operations


def _owned(graph: Graph, subset: VertexSet) -> None:
    if subset.graph is not graph:
        raise ForeignSet("vertex set belongs to a different graph object")


def is_independent(graph: Graph, subset: VertexSet) -> bool:
    """True when no edge joins two members of ``subset``."""
    _owned(graph, subset)
    return _is_independent_mask(graph.adj, subset.mask)


def require_local_max(graph: Graph, subset: VertexSet, role: str) -> None:
    """Raise :class:`NotLocalMax` (with evidence) unless ``subset`` is a
    local maximum independent set of ``graph``."""
    _owned(graph, subset)
    if not _is_independent_mask(graph.adj, subset.mask):
        raise NotLocalMax(f"the {role} set {subset.render()} is not independent")
    supported = alpha_mask(graph.adj, _closed_mask(graph.adj, subset.mask))
    if len(subset) != supported:
        raise NotLocalMax(
            f"the {role} set {subset.render()} has size {len(subset)}, but its "
            f"closed neighborhood supports an independent set of size {supported}"
        )


def alpha(graph: Graph) -> int:
    """The independence number of the graph."""
    return alpha_mask(graph.adj, graph.full_mask)


def is_local_max_independent(graph: Graph, subset: VertexSet) -> bool:
    """True when ``subset`` is a maximum independent set of the subgraph
    induced on its own closed neighborhood."""
    _owned(graph, subset)
    return local_max_mask(graph.adj, subset.mask)


def is_crown(graph: Graph, subset: VertexSet) -> bool:
    """True when ``subset`` is independent and its open neighborhood can be
    matched one-to-one into it."""
    _owned(graph, subset)
    if not _is_independent_mask(graph.adj, subset.mask):
        return False
    boundary = VertexSet(graph, neighborhood_mask(graph, subset.mask))
    return saturating_matching(graph, boundary, subset).saturated


def diff(graph: Graph, subset: VertexSet) -> int:
    """The difference |X| - |N(X)| of an arbitrary vertex set."""
    _owned(graph, subset)
    return len(subset) - neighborhood_count(graph.adj, subset.mask)


def critical_difference(graph: Graph) -> CriticalProfile:
    """The maximum of |X| - |N(X)| over all vertex subsets, with a witness."""
    value, witness = critical_profile_masks(graph.adj, graph.n)
    return CriticalProfile(value, VertexSet(graph, witness))


def is_critical(graph: Graph, subset: VertexSet) -> bool:
    """True when ``subset`` is independent and attains the graph's critical
    difference."""
    _owned(graph, subset)
    if not _is_independent_mask(graph.adj, subset.mask):
        return False
    value, _ = critical_profile_masks(graph.adj, graph.n)
    return diff(graph, subset) == value


def enumerate_family(graph: Graph, kind: FamilyKind) -> SetFamily:
    """Enumerate one of the four global families in canonical order.

    Each family is computed from its own definition (alpha tests for Psi,
    matchings for Crown, differences for CritIndep), so cross-family
    containment checks remain meaningful.
    """
    if kind not in _GLOBAL_KINDS:
        raise ValueError(f"cannot enumerate {kind.value} without an anchor set")
    adj, n = graph.adj, graph.n
    ind = independent_masks(adj, n)
    if kind is FamilyKind.OMEGA:
        best = alpha_mask(adj, graph.full_mask)
        masks = [m for m in ind if m.bit_count() == best]
    elif kind is FamilyKind.PSI:
        masks = psi_mask_list(adj, n, ind)
    elif kind is FamilyKind.CROWN:
        masks = []
        for m in ind:
            boundary = VertexSet(graph, neighborhood_mask(graph, m))
            if saturating_matching(graph, boundary, VertexSet(graph, m)).saturated:
                masks.append(m)
    else:
        value, _ = critical_profile_masks(adj, n)
        masks = [
            m for m in ind if m.bit_count() - neighborhood_count(adj, m) == value
        ]
    members = tuple(VertexSet(graph, m) for m in masks)
    return SetFamily(kind, graph, members)


def enumerate_omega(graph: Graph) -> SetFamily:
    """All maximum independent sets, in canonical order."""
    return enumerate_family(graph, FamilyKind.OMEGA)


def core_and_corona(graph: Graph) -> tuple[VertexSet, VertexSet]:
    """(intersection, union) over all maximum independent sets."""
    omega = enumerate_omega(graph)
    core = graph.full_mask
    corona = 0
    for member in omega:
        core &= member.mask
        corona |= member.mask
    if not len(omega):
        core = 0
    return VertexSet(graph, core), VertexSet(graph, corona)


def is_konig_egervary(graph: Graph) -> bool:
    """True when the independence and matching numbers sum to the order."""
    return alpha(graph) + len(max_matching(graph)) == graph.n
