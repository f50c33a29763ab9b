"""Three small labeled graphs used as worked examples throughout the docs,
the CLI ``examples`` command, and the golden tests."""

from __future__ import annotations

from .graphs import Graph, parse_edge_list

STAR_EDGES = """\
vertices: x, a, b, c
x a
x b
x c
"""

TRIANGLE_PENDANT_EDGES = """\
vertices: a, b, c, d
a b
b c
c a
b d
"""

SIX_VERTEX_TREE_EDGES = """\
vertices: a, b, c, d, e, f
a b
a c
c d
c e
c f
"""


def star() -> Graph:
    """K_{1,3}: center x with leaves a, b, c."""
    return parse_edge_list(STAR_EDGES)


def triangle_pendant() -> Graph:
    """A triangle a-b-c with a pendant d attached to b."""
    return parse_edge_list(TRIANGLE_PENDANT_EDGES)


def six_vertex_tree() -> Graph:
    """The tree with a-b, a-c and leaves d, e, f hanging off c."""
    return parse_edge_list(SIX_VERTEX_TREE_EDGES)
