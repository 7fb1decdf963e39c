import networkx as nx
import numpy as np
import pytest

from corona_spectra.graphs import Graph, analyze, parse_graph_spec
from corona_spectra.products import copy_vertex, edge_corona, neighbourhood_corona


def as_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def check_nc_laws(g1, g2):
    prod = neighbourhood_corona(g1, g2)
    n1, n2 = g1.n, g2.n
    assert prod.n == n1 * (n2 + 1)
    assert prod.m == g1.m + n1 * g2.m + 2 * g1.m * n2
    deg = prod.degrees
    for i in range(n1):
        assert deg[i] == (n2 + 1) * g1.degrees[i]
        for j in range(n2):
            assert deg[copy_vertex(n1, n2, i, j)] == g2.degrees[j] + g1.degrees[i]
    return prod


def test_fig1_counts():
    prod = check_nc_laws(parse_graph_spec("path:4"), parse_graph_spec("path:3"))
    assert (prod.n, prod.m) == (16, 29)


def test_k2_k1_is_p4():
    prod = neighbourhood_corona(parse_graph_spec("complete:2"), parse_graph_spec("complete:1"))
    assert nx.is_isomorphic(as_nx(prod), nx.path_graph(4))


def test_c4_k2_degrees():
    prod = check_nc_laws(parse_graph_spec("cycle:4"), parse_graph_spec("complete:2"))
    assert set(prod.degrees[:4]) == {6}
    assert set(prod.degrees[4:]) == {3}


def test_laws_on_random_pairs():
    rng = np.random.default_rng(2)
    for _ in range(30):
        gs = []
        for n in rng.integers(1, 8, size=2):
            a = np.triu(rng.random((n, n)) < 0.5, 1)
            gs.append(Graph.from_edges(int(n), list(zip(*np.nonzero(a)))))
        check_nc_laws(*gs)
        ec = edge_corona(*gs)
        g1, g2 = gs
        assert ec.n == g1.n + g1.m * g2.n
        assert ec.m == g1.m + g1.m * g2.m + 2 * g1.m * g2.n


def test_edge_corona_examples():
    ec = edge_corona(parse_graph_spec("cycle:4"), parse_graph_spec("complete:1"))
    assert (ec.n, ec.m) == (8, 12)
    assert set(ec.degrees[:4]) == {4} and set(ec.degrees[4:]) == {2}
    k4 = edge_corona(parse_graph_spec("complete:2"), parse_graph_spec("complete:2"))
    assert nx.is_isomorphic(as_nx(k4), nx.complete_graph(4))
    empty = parse_graph_spec("empty:3")
    assert edge_corona(empty, parse_graph_spec("cycle:5")) == empty


def test_edge_corona_copy_order():
    g1 = parse_graph_spec("path:3")  # edges (0,1), (1,2)
    ec = edge_corona(g1, parse_graph_spec("complete:1"))
    assert set(ec.neighbours[3]) == {0, 1}
    assert set(ec.neighbours[4]) == {1, 2}


@pytest.mark.parametrize("g1,g2", [("cycle:5", "path:3"), ("path:4", "empty:2"), ("complete:1", "cycle:4")])
def test_component_counts_match_networkx(g1, g2):
    prod = neighbourhood_corona(parse_graph_spec(g1), parse_graph_spec(g2))
    assert analyze(prod).component_count == nx.number_connected_components(as_nx(prod))
