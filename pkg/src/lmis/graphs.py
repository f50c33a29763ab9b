"""Simple undirected graphs over vertex bitmasks, vertex sets, and graph6/edge-list codecs.

Vertices are integers 0..n-1.  Adjacency is stored as one int bitmask per
vertex, which keeps neighborhood algebra (unions, closed neighborhoods,
deletion) down to a few integer operations.  Graphs may carry optional string
labels for rendering; labels never affect the combinatorics.
"""

from __future__ import annotations

from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import EmptyInput, ForeignSet, MalformedGraph6, ParseError, SelfLoop


def _mask_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """An immutable simple undirected graph.

    ``adj[v]`` is the bitmask of neighbors of ``v``.  The adjacency must be
    symmetric and irreflexive; the constructor verifies both.
    """

    def __init__(self, n: int, adj: Iterable[int], labels: tuple[str, ...] | None = None):
        adj = tuple(adj)
        if n < 0 or len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows for {n} vertices")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbors outside 0..{n - 1}")
            if row >> v & 1:
                raise SelfLoop(f"vertex {v} is adjacent to itself")
            for u in _mask_bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric between {u} and {v}")
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise ValueError(f"{len(labels)} labels for {n} vertices")
            if len(set(labels)) != n:
                raise ValueError("vertex labels must be distinct")
        self.n = n
        self.adj = adj
        self.labels = labels

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: tuple[str, ...] | None = None,
    ) -> "Graph":
        """Build a graph from (u, v) pairs; duplicate edges collapse silently."""
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        return tuple(
            (u, v) for u in range(self.n) for v in _mask_bits(self.adj[u]) if u < v
        )

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _label_index(self) -> dict[str, int]:
        if self.labels is None:
            return {}
        return {name: i for i, name in enumerate(self.labels)}

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def vertex_set(self, vertices: Iterable[int | str] = ()) -> "VertexSet":
        """Make a :class:`VertexSet` of this graph from indices and/or labels."""
        mask = 0
        for item in vertices:
            if isinstance(item, str):
                if item not in self._label_index:
                    raise ValueError(f"unknown vertex label {item!r}")
                mask |= 1 << self._label_index[item]
            else:
                if not 0 <= item < self.n:
                    raise ValueError(f"vertex index {item} outside 0..{self.n - 1}")
                mask |= 1 << item
        return VertexSet(self, mask)

    def all_vertices(self) -> "VertexSet":
        return VertexSet(self, self.full_mask)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.n, self.adj, self.labels))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class VertexSet:
    """A subset of one graph's vertices, owned by that graph object.

    Ownership is by object identity: combining sets of two different graph
    objects raises :class:`ForeignSet` even if the graphs are equal.  Equality
    between sets of the same graph is extensional (same members).
    """

    __slots__ = ("graph", "mask")

    def __init__(self, graph: Graph, mask: int):
        if mask & ~graph.full_mask:
            raise ValueError("mask contains vertices outside the graph")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("VertexSet is immutable")

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(_mask_bits(self.mask))

    def names(self) -> tuple[str, ...]:
        return tuple(self.graph.label_of(v) for v in _mask_bits(self.mask))

    def render(self) -> str:
        return "{" + ",".join(self.names()) + "}"

    def _check_same(self, other: "VertexSet") -> None:
        if self.graph is not other.graph:
            raise ForeignSet("vertex sets belong to different graph objects")

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return _mask_bits(self.mask)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.graph.n and self.mask >> v & 1 == 1

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_same(other)
        return VertexSet(self.graph, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_same(other)
        return VertexSet(self.graph, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_same(other)
        return VertexSet(self.graph, self.mask & ~other.mask)

    def __le__(self, other: "VertexSet") -> bool:
        self._check_same(other)
        return self.mask & ~other.mask == 0

    def complement(self) -> "VertexSet":
        return VertexSet(self.graph, self.graph.full_mask & ~self.mask)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.graph is other.graph and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((id(self.graph), self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.render()})"


class InducedSubgraph:
    """An induced subgraph together with the index mapping back to its parent.

    ``vertex_map[i]`` is the parent vertex that became vertex ``i``; the map is
    ascending, so vertex order is inherited from the parent.
    """

    __slots__ = ("graph", "parent", "vertex_map")

    def __init__(self, graph: Graph, parent: Graph, vertex_map: tuple[int, ...]):
        self.graph = graph
        self.parent = parent
        self.vertex_map = vertex_map

    @property
    def n(self) -> int:
        return self.graph.n

    def lift_mask(self, mask: int) -> int:
        """Translate a vertex mask of the subgraph into a mask of the parent."""
        out = 0
        for i in _mask_bits(mask):
            out |= 1 << self.vertex_map[i]
        return out

    def lift(self, subset: VertexSet) -> VertexSet:
        """Translate a vertex set of the subgraph into one of the parent graph."""
        if subset.graph is not self.graph:
            raise ForeignSet("set does not belong to this induced subgraph")
        return VertexSet(self.parent, self.lift_mask(subset.mask))

    def project(self, subset: VertexSet) -> VertexSet:
        """Translate a parent vertex set (contained in this subgraph) down."""
        if subset.graph is not self.parent:
            raise ForeignSet("set does not belong to the parent graph")
        down = {old: new for new, old in enumerate(self.vertex_map)}
        mask = 0
        for v in _mask_bits(subset.mask):
            if v not in down:
                raise ValueError(f"vertex {v} is not in the induced subgraph")
            mask |= 1 << down[v]
        return VertexSet(self.graph, mask)

    def __repr__(self) -> str:
        return f"InducedSubgraph(n={self.n}, parent_n={self.parent.n})"


def _same_graph(graph: Graph, subset: VertexSet) -> None:
    if subset.graph is not graph:
        raise ForeignSet("vertex set belongs to a different graph object")


def neighborhood_mask(graph: Graph, mask: int) -> int:
    """Union of adjacency rows over ``mask`` (open neighborhood, as a mask)."""
    out = 0
    for v in _mask_bits(mask):
        out |= graph.adj[v]
    return out


def open_neighborhood(graph: Graph, subset: VertexSet) -> VertexSet:
    """All vertices adjacent to at least one member of ``subset``."""
    _same_graph(graph, subset)
    return VertexSet(graph, neighborhood_mask(graph, subset.mask))


def closed_neighborhood(graph: Graph, subset: VertexSet) -> VertexSet:
    """``subset`` together with its open neighborhood."""
    _same_graph(graph, subset)
    return VertexSet(graph, subset.mask | neighborhood_mask(graph, subset.mask))


def induced_subgraph_by_mask(graph: Graph, mask: int) -> InducedSubgraph:
    """Induce on the vertices of ``mask``, renumbering in ascending order."""
    kept = list(_mask_bits(mask))
    down = {old: new for new, old in enumerate(kept)}
    adj = []
    for old in kept:
        row = 0
        for u in _mask_bits(graph.adj[old] & mask):
            row |= 1 << down[u]
        adj.append(row)
    labels = None
    if graph.labels is not None:
        labels = tuple(graph.labels[old] for old in kept)
    return InducedSubgraph(Graph(len(kept), adj, labels), graph, tuple(kept))


def induced_subgraph(graph: Graph, subset: VertexSet) -> InducedSubgraph:
    """The subgraph induced on ``subset``, with its map back to ``graph``."""
    _same_graph(graph, subset)
    return induced_subgraph_by_mask(graph, subset.mask)


def delete_closed_neighborhood(graph: Graph, subset: VertexSet) -> InducedSubgraph:
    """Remove ``subset`` and every neighbor of it; induce on what is left."""
    _same_graph(graph, subset)
    closed = subset.mask | neighborhood_mask(graph, subset.mask)
    return induced_subgraph_by_mask(graph, graph.full_mask & ~closed)


def is_bipartite(graph: Graph) -> bool:
    """True when the vertices admit a proper 2-coloring."""
    color = [-1] * graph.n
    for start in range(graph.n):
        if color[start] != -1:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in _mask_bits(graph.adj[v]):
                if color[u] == -1:
                    color[u] = color[v] ^ 1
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


# --------------------------------------------------------------------------
# graph6 codec.  Reference: the format stores the vertex count, then the
# upper triangle of the adjacency matrix column by column, six bits per
# printable byte (offset 63), padded with zero bits.


_HEADER = ">>graph6<<"


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return (vertex count, bytes consumed) from a graph6 size header."""
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise MalformedGraph6("truncated 6-byte size header")
        chunk = data[2:8]
        _check_bytes(chunk)
        n = 0
        for b in chunk:
            n = n << 6 | (b - 63)
        if n < 258048:
            raise MalformedGraph6("non-canonical 6-byte size header")
        return n, 8
    if len(data) < 4:
        raise MalformedGraph6("truncated 3-byte size header")
    chunk = data[1:4]
    _check_bytes(chunk)
    n = 0
    for b in chunk:
        n = n << 6 | (b - 63)
    if not 63 <= n < 258048:
        raise MalformedGraph6("non-canonical 3-byte size header")
    return n, 4


def _check_bytes(chunk: bytes) -> None:
    for b in chunk:
        if not 63 <= b <= 126:
            raise MalformedGraph6(f"byte {b} outside the printable graph6 range")


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (optionally prefixed with the format header)."""
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise EmptyInput("empty graph6 input")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise MalformedGraph6("graph6 input is not ASCII") from exc
    _check_bytes(data[:1])
    n, offset = _decode_size(data)
    k = n * (n - 1) // 2
    body = data[offset:]
    if len(body) != (k + 5) // 6:
        raise MalformedGraph6(
            f"expected {(k + 5) // 6} adjacency bytes for n={n}, got {len(body)}"
        )
    _check_bytes(body)
    adj = [0] * n
    pairs = ((u, v) for v in range(1, n) for u in range(v))
    index = 0
    for b in body:
        val = b - 63
        for shift in range(5, -1, -1):
            bit = val >> shift & 1
            if index < k:
                if bit:
                    u, v = next(pairs)
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
                else:
                    next(pairs)
            elif bit:
                raise MalformedGraph6("nonzero padding bits")
            index += 1
    return Graph(n, adj)


def emit_graph6(graph: Graph) -> str:
    """Encode a graph as a graph6 string (inverse of :func:`parse_graph6`)."""
    n = graph.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63]
    elif n <= 68719476735:
        head = [126, 126] + [((n >> shift) & 63) + 63 for shift in range(30, -1, -6)]
    else:
        raise ValueError("graph too large for graph6")
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(graph.adj[u] >> v & 1)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        val = 0
        for bit in bits[i : i + 6]:
            val = val << 1 | bit
        body.append(val + 63)
    return bytes(head + body).decode("ascii")


def parse_edge_list(text: str) -> Graph:
    """Parse a labeled edge list: one ``u v`` pair per line.

    ``#`` starts a comment; blank lines are skipped.  A line of the form
    ``vertices: a, b, c`` declares vertices up front (fixing their order and
    allowing isolated ones).  Other vertices are numbered by first appearance.
    """
    order: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.lower().startswith("vertices:"):
            for name in line[len("vertices:"):].split(","):
                name = name.strip()
                if name:
                    order.setdefault(name, len(order))
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected an edge line 'u v', got {raw!r}")
        u, v = parts
        if u == v:
            raise SelfLoop(f"self-loop at {u!r}")
        iu = order.setdefault(u, len(order))
        iv = order.setdefault(v, len(order))
        edges.append((iu, iv))
    if not order:
        raise EmptyInput("edge list declares no vertices")
    return Graph.from_edges(len(order), edges, labels=tuple(order))


def enumerate_labeled_graphs(n: int) -> Iterator[Graph]:
    """Yield every labeled simple graph on exactly ``n`` vertices.

    Graphs appear in increasing order of the edge-selection bitmask over the
    lexicographic pair list, so the order is deterministic.
    """
    pairs = list(combinations(range(n), 2))
    for selection in range(1 << len(pairs)):
        adj = [0] * n
        remaining = selection
        while remaining:
            low = remaining & -remaining
            u, v = pairs[low.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            remaining ^= low
        yield Graph(n, adj)
