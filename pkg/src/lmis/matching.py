"""Matchings: bipartite maximum matching, saturation certificates, and the
general (blossom) maximum matching.

All routines are deterministic: vertices are always scanned in ascending
index order, so identical inputs give identical matchings.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import ForeignSet, InternalContradiction, NotLocalMax, OverlappingSides
from .graphs import Graph, VertexSet, _mask_bits, neighborhood_mask


@dataclass(frozen=True)
class Matching:
    """A set of pairwise-disjoint edges of one graph."""

    graph: Graph
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        seen = 0
        for u, v in self.edges:
            if not (0 <= u < v < self.graph.n):
                raise ValueError(f"matching edge ({u}, {v}) is not normalized")
            if not self.graph.adj[u] >> v & 1:
                raise ValueError(f"({u}, {v}) is not an edge of the graph")
            pair = 1 << u | 1 << v
            if seen & pair:
                raise ValueError(f"matching reuses a vertex of ({u}, {v})")
            seen |= pair

    @classmethod
    def from_pairs(cls, graph: Graph, pairs: Iterable[tuple[int, int]]) -> "Matching":
        return cls(graph, frozenset((min(u, v), max(u, v)) for u, v in pairs))

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Edges in lexicographic order (the canonical rendering)."""
        return tuple(sorted(self.edges))

    def __len__(self) -> int:
        return len(self.edges)

    def covered(self) -> VertexSet:
        mask = 0
        for u, v in self.edges:
            mask |= 1 << u | 1 << v
        return VertexSet(self.graph, mask)

    def saturates(self, subset: VertexSet) -> bool:
        """True when every vertex of ``subset`` is an endpoint of the matching."""
        return subset.mask & ~self.covered().mask == 0

    def render(self) -> str:
        label = self.graph.label_of
        return " ".join(f"{label(u)}-{label(v)}" for u, v in self.pairs)


@dataclass(frozen=True)
class SaturationResult:
    """Either a matching that saturates the source side, or a witness that
    none exists: a source subset with strictly fewer neighbors in the target.
    """

    matching: Matching | None
    violator: VertexSet | None

    def __post_init__(self) -> None:
        if (self.matching is None) == (self.violator is None):
            raise ValueError("exactly one of matching/violator must be present")

    @property
    def saturated(self) -> bool:
        return self.matching is not None


def _check_sides(graph: Graph, left: VertexSet, right: VertexSet) -> None:
    if left.graph is not graph or right.graph is not graph:
        raise ForeignSet("side sets belong to a different graph object")
    if left.mask & right.mask:
        raise OverlappingSides("the two sides share vertices")


def _hopcroft_karp(adj: tuple[int, ...], left_mask: int, right_mask: int) -> dict[int, int]:
    """Maximum matching between the two sides, using only left-right edges.

    Returns a partner map containing entries for both endpoints of every
    matched edge.
    """
    left = list(_mask_bits(left_mask))
    match: dict[int, int] = {}
    dist: dict[int, int] = {}

    def bfs() -> bool:
        dist.clear()
        queue = deque()
        for u in left:
            if u not in match:
                dist[u] = 0
                queue.append(u)
        reachable_free = False
        while queue:
            u = queue.popleft()
            for w in _mask_bits(adj[u] & right_mask):
                nxt = match.get(w)
                if nxt is None:
                    reachable_free = True
                elif nxt not in dist:
                    dist[nxt] = dist[u] + 1
                    queue.append(nxt)
        return reachable_free

    def dfs(u: int) -> bool:
        for w in _mask_bits(adj[u] & right_mask):
            nxt = match.get(w)
            if nxt is None or (dist.get(nxt) == dist[u] + 1 and dfs(nxt)):
                match[w] = u
                match[u] = w
                return True
        dist[u] = -1
        return False

    while bfs():
        for u in left:
            if u not in match and dist.get(u) == 0:
                dfs(u)
    return match


def max_bipartite_matching(graph: Graph, left: VertexSet, right: VertexSet) -> Matching:
    """Maximum matching using only the edges between ``left`` and ``right``."""
    _check_sides(graph, left, right)
    match = _hopcroft_karp(graph.adj, left.mask, right.mask)
    return Matching.from_pairs(
        graph, ((u, match[u]) for u in _mask_bits(left.mask) if u in match)
    )


def _hall_violator(
    adj: tuple[int, ...], source_mask: int, target_mask: int, match: dict[int, int]
) -> int:
    """Source vertices reachable by alternating paths from the smallest
    unmatched source vertex; their target neighborhood is strictly smaller.
    """
    start = next(u for u in _mask_bits(source_mask) if u not in match)
    reach = 1 << start
    frontier = [start]
    seen_targets = 0
    while frontier:
        nxt: list[int] = []
        for u in frontier:
            for w in _mask_bits(adj[u] & target_mask & ~seen_targets):
                seen_targets |= 1 << w
                partner = match.get(w)
                if partner is None:
                    raise InternalContradiction(
                        "alternating search reached an unmatched target vertex, "
                        "so the matching was not maximum"
                    )
                if not reach >> partner & 1:
                    reach |= 1 << partner
                    nxt.append(partner)
        frontier = nxt
    return reach


def saturating_matching(graph: Graph, source: VertexSet, target: VertexSet) -> SaturationResult:
    """Try to match every ``source`` vertex to a distinct ``target`` neighbor.

    On failure the result carries a violator: a subset X of the source with
    |N(X) ∩ target| < |X|, found by alternating-path reachability from the
    smallest unmatched source vertex.
    """
    _check_sides(graph, source, target)
    match = _hopcroft_karp(graph.adj, source.mask, target.mask)
    if all(u in match for u in _mask_bits(source.mask)):
        matching = Matching.from_pairs(
            graph, ((u, match[u]) for u in _mask_bits(source.mask))
        )
        return SaturationResult(matching=matching, violator=None)
    violator = _hall_violator(graph.adj, source.mask, target.mask, match)
    return SaturationResult(matching=None, violator=VertexSet(graph, violator))


def _blossom_matching(n: int, adjlist: list[list[int]]) -> list[int]:
    """General maximum matching (blossom shrinking), partner array or -1."""
    match = [-1] * n
    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        marked = set()
        while True:
            a = base[a]
            marked.add(a)
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if b in marked:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_augmenting_path(root: int) -> bool:
        for i in range(n):
            parent[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adjlist[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    curbase = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, curbase, to, blossom)
                    mark_path(to, curbase, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        u = to
                        while u != -1:
                            pv = parent[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    used[match[to]] = True
                    queue.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_augmenting_path(v)
    return match


def max_matching(graph: Graph) -> Matching:
    """A maximum matching of the whole graph."""
    adjlist = [list(_mask_bits(row)) for row in graph.adj]
    match = _blossom_matching(graph.n, adjlist)
    return Matching.from_pairs(
        graph, ((v, match[v]) for v in range(graph.n) if match[v] > v)
    )


def cross_matching(graph: Graph, s: VertexSet, t: VertexSet) -> Matching:
    """A perfect matching between S ∩ N(T) and T ∩ N(S) for S, T that are
    both local maximum independent sets.

    The matching is built by saturating T ∩ N(S) into S \\ T; every partner
    is adjacent to a T-vertex, hence lands in S ∩ N(T), and the symmetric run
    certifies the two crossing parts have equal size.  A saturation failure
    in either direction is impossible for valid inputs and raises
    :class:`InternalContradiction`.
    """
    from .independence import is_local_max_independent

    if s.graph is not graph or t.graph is not graph:
        raise ForeignSet("vertex sets belong to a different graph object")
    for name, subset in (("first", s), ("second", t)):
        if not is_local_max_independent(graph, subset):
            raise NotLocalMax(
                f"the {name} set {subset.render()} is not a local maximum "
                "independent set"
            )
    x_mask = s.mask & neighborhood_mask(graph, t.mask)
    y_mask = t.mask & neighborhood_mask(graph, s.mask)
    if x_mask.bit_count() != y_mask.bit_count():
        raise InternalContradiction(
            "the two crossing parts differ in size, which the exchange "
            "theory rules out"
        )
    match = _hopcroft_karp(graph.adj, y_mask, s.mask & ~t.mask)
    matched_sources = [y for y in _mask_bits(y_mask) if y in match]
    if len(matched_sources) != y_mask.bit_count():
        raise InternalContradiction("T ∩ N(S) could not be saturated into S")
    partners = 0
    for y in matched_sources:
        partners |= 1 << match[y]
    if partners != x_mask:
        raise InternalContradiction(
            "saturation partners do not equal S ∩ N(T)"
        )
    reverse = _hopcroft_karp(graph.adj, x_mask, t.mask & ~s.mask)
    if any(x not in reverse for x in _mask_bits(x_mask)):
        raise InternalContradiction("S ∩ N(T) could not be saturated into T")
    return Matching.from_pairs(graph, ((y, match[y]) for y in matched_sources))
