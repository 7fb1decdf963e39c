import json

import numpy as np
import pytest

from corona_spectra.closed_form import PreconditionError
from corona_spectra.cospectral import coronals_equal, generate_cospectral_pair, verify_cospectral
from corona_spectra.graphs import Graph, parse_graph_spec
from corona_spectra.polynomial import IntPolynomial
from corona_spectra.products import neighbourhood_corona

G = parse_graph_spec
STAR = "kpq:1,4"
SALTIRE = "union:cycle:4+complete:1"


def test_seed_pair():
    ok, pa, pb = verify_cospectral(G(STAR), G(SALTIRE), "A")
    assert ok and pa == IntPolynomial([0, 0, 0, -4, 0, 1])
    assert not verify_cospectral(G(STAR), G(SALTIRE), "L")[0]
    g = G("petersen")
    for kind in "ALQ":
        assert verify_cospectral(g, g, kind)[0]


def test_builtin_names():
    assert G("builtin:k14") == G(STAR).relabel(G("builtin:k14").name) or G("builtin:k14").edges == G(STAR).edges
    assert verify_cospectral(G("builtin:k14"), G("builtin:c4uk1"), "A")[0]


def test_a_left_k2():
    cert = generate_cospectral_pair("A-left", G(STAR), G(SALTIRE), G("complete:2"))
    assert cert.equal and cert.kind == "A"
    assert all(g.n == 15 for g in cert.graphs)
    d = cert.to_json()
    assert d["char_polys"][0] == d["char_polys"][1]
    assert json.dumps(d["char_polys"][0]) == json.dumps(d["char_polys"][1])


def test_a_left_random_h():
    rng = np.random.default_rng(99)
    for _ in range(5):
        n = int(rng.integers(1, 6))
        a = np.triu(rng.random((n, n)) < 0.5, 1)
        h = Graph.from_edges(n, list(zip(*np.nonzero(a))))
        assert generate_cospectral_pair("A-left", G(STAR), G(SALTIRE), h).equal


def test_not_laplacian_cospectral():
    h = G("complete:2")
    a = neighbourhood_corona(G(STAR), h)
    b = neighbourhood_corona(G(SALTIRE), h)
    assert verify_cospectral(a, b, "A")[0]
    assert not verify_cospectral(a, b, "L")[0]


def test_a_right_regular_seeds():
    s, r = G("builtin:shrikhande"), G("rook:4")
    assert coronals_equal(s, r, "A")
    cert = generate_cospectral_pair("A-right", s, r, G("complete:2"))
    assert cert.equal and cert.coronal_check


def test_a_right_rejects_differing_coronals():
    with pytest.raises(PreconditionError):
        generate_cospectral_pair("A-right", G(STAR), G(SALTIRE), G("complete:2"))


def test_rejects_non_cospectral_seeds():
    with pytest.raises(PreconditionError):
        generate_cospectral_pair("A-left", G("path:4"), G("cycle:4"), G("complete:2"))


def test_q_mode_needs_regular():
    with pytest.raises(PreconditionError):
        generate_cospectral_pair("Q", G(STAR), G(SALTIRE), G("complete:2"))


def test_unknown_mode():
    with pytest.raises(ValueError):
        generate_cospectral_pair("L", G(STAR), G(SALTIRE), G("complete:2"))
