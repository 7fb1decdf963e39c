"""Explicit neighbourhood-corona and edge-corona graphs.

Both products keep the first factor on vertices ``0..n1-1`` and lay out the
copies of the second factor contiguously after it (copy-major order).
"""

from __future__ import annotations

from .graphs import Graph


def copy_vertex(n1: int, n2: int, i: int, j: int) -> int:
    """Index of vertex ``j`` of copy ``i`` in either product."""
    return n1 + i * n2 + j


def neighbourhood_corona(g1: Graph, g2: Graph) -> Graph:
    """G1 plus n1 copies of G2; every vertex of copy i joins the G1-neighbours of i."""
    n1, n2 = g1.n, g2.n
    edges = list(g1.edges)
    for i in range(n1):
        base = n1 + i * n2
        edges += [(base + u, base + v) for u, v in g2.edges]
        for w in g1.neighbours[i]:
            edges += [(w, base + j) for j in range(n2)]
    return Graph(n1 * (n2 + 1), tuple(edges), _name("*", g1, g2))


def edge_corona(g1: Graph, g2: Graph) -> Graph:
    """G1 plus m1 copies of G2; copy i is joined to both ends of the i-th edge
    of G1 (edges in lexicographic order)."""
    n1, n2 = g1.n, g2.n
    edges = list(g1.edges)
    for i, (a, b) in enumerate(g1.edges):
        base = n1 + i * n2
        edges += [(base + u, base + v) for u, v in g2.edges]
        for j in range(n2):
            edges += [(a, base + j), (b, base + j)]
    return Graph(n1 + g1.m * n2, tuple(edges), _name("<>", g1, g2))


def _name(op, g1, g2):
    if g1.name and g2.name:
        return f"({g1.name}){op}({g2.name})"
    return None
