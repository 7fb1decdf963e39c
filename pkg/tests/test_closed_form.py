import math

import numpy as np
import pytest

from corona_spectra.closed_form import (
    FASTPATHS,
    PreconditionError,
    compare_spectra,
    edge_corona_l_spectrum,
    fastpath_values,
    nc_spectrum,
    nc_spectrum_fastpath,
    random_pairs,
    regular_a_discriminants,
    verify_against_oracle,
)
from corona_spectra.graphs import matrix_of, parse_graph_spec
from corona_spectra.products import edge_corona, neighbourhood_corona
from corona_spectra.spectral import char_poly_exact, eigenvalues

G = parse_graph_spec
REGULAR_G1 = ["cycle:4", "cycle:5", "cycle:6", "complete:4", "complete:5", "petersen", "cube"]
SMALL_G2 = ["complete:1", "complete:2", "path:3", "kpq:1,2", "cycle:4", "empty:2"]
PHI = (1 + math.sqrt(5)) / 2


def test_k2_k1_adjacency_is_p4():
    vals = nc_spectrum("A", G("complete:2"), G("complete:1")).roots
    assert np.allclose(vals, [-PHI, -1 / PHI, 1 / PHI, PHI], atol=1e-12)


def test_k2_k1_laplacian():
    vals = nc_spectrum("L", G("complete:2"), G("complete:1")).roots
    assert np.allclose(vals, [0, 2 - math.sqrt(2), 2, 2 + math.sqrt(2)], atol=1e-12)


def test_edgeless_base_decouples():
    g2 = G("path:3")
    vals = nc_spectrum("A", G("empty:3"), g2).roots
    expected = np.sort(np.concatenate([np.repeat(eigenvalues(matrix_of(g2, "A")), 3), np.zeros(3)]))
    assert np.allclose(vals, expected, atol=1e-12)


def test_c4_k2_signless():
    res = nc_spectrum("Q", G("cycle:4"), G("complete:2"))
    s2, s3 = math.sqrt(2), math.sqrt(3)
    expected = sorted([2] * 4 + [4 - 2 * s2, 4 + 2 * s2, 4, 4, 6, 6, 6 - 2 * s3, 6 + 2 * s3])
    assert np.allclose(res.roots, expected, atol=1e-10)
    assert abs(res.roots.sum() - 48) < 1e-9


@pytest.mark.parametrize("kind,g1,g2", [("A", "path:4", "path:3"), ("Q", "cycle:5", "kpq:1,2"),
                                        ("L", "petersen", "path:3"), ("A", "kpq:1,3", "cycle:4")])
def test_factor_product_is_char_poly(kind, g1, g2):
    res = nc_spectrum(kind, G(g1), G(g2))
    prod = neighbourhood_corona(G(g1), G(g2))
    exact = char_poly_exact(matrix_of(prod, kind))
    assert res.order == prod.n
    for x0 in (-3, -1, 2, 5, 11):
        ref = exact(x0)
        assert abs(res.evaluate(x0) - ref) <= 1e-8 * max(1.0, abs(ref))


def test_spectrum_sums():
    for g1 in REGULAR_G1[:4]:
        for g2 in SMALL_G2:
            prod = neighbourhood_corona(G(g1), G(g2))
            assert abs(nc_spectrum("A", G(g1), G(g2)).roots.sum()) < 1e-8
            for kind in "LQ":
                assert abs(nc_spectrum(kind, G(g1), G(g2)).roots.sum() - 2 * prod.m) < 1e-8


@pytest.mark.parametrize("pair", random_pairs(seed=20240601, count=20))
def test_random_adjacency_battery(pair):
    rec = verify_against_oracle("A", *pair)
    assert rec.passed, rec.to_json()


@pytest.mark.parametrize("g1", REGULAR_G1)
@pytest.mark.parametrize("g2", SMALL_G2)
@pytest.mark.parametrize("kind", "LQ")
def test_regular_battery(kind, g1, g2):
    rec = verify_against_oracle(kind, G(g1), G(g2))
    assert rec.passed and rec.max_abs_error <= 1e-8, rec.to_json()


def test_q_and_l_need_regular_g1():
    with pytest.raises(PreconditionError):
        nc_spectrum("Q", G("path:4"), G("path:3"))
    with pytest.raises(PreconditionError):
        nc_spectrum("L", G("kpq:1,3"), G("path:3"))


def test_regular_a_fastpath_example():
    vals = fastpath_values("regular-A", G("cycle:4"), G("complete:2"))
    s33, s41 = math.sqrt(33), math.sqrt(41)
    expected = sorted([-1] * 4 + [(3 - s33) / 2, (3 + s33) / 2, 1, 1, 0, 0, (-1 - s41) / 2, (-1 + s41) / 2])
    assert np.allclose(vals, expected, atol=1e-10)


def test_printed_discriminant_goes_complex():
    rep = regular_a_discriminants(G("cycle:4"), G("complete:2"))
    assert rep["linear_form_complex"] and not rep["squared_form_complex"]
    bad = [r for r in rep["rows"] if r["linear_gives_complex"]]
    assert bad and all(r["lambda"] < 0 for r in bad)


def test_kpq_adjacency_degenerate_cubic():
    vals = fastpath_values("kpq-A", G("complete:1"), (1, 2))
    assert np.allclose(vals, [-math.sqrt(2), 0, 0, math.sqrt(2)], atol=1e-12)


def test_laplacian_fastpath_k2_k1():
    vals = fastpath_values("laplacian", G("complete:2"), G("complete:1"))
    assert np.allclose(vals, [0, 2 - math.sqrt(2), 2, 2 + math.sqrt(2)], atol=1e-12)


FAST_DOMAINS = [
    ("regular-A", "A", ["cycle:4", "path:4", "petersen", "kpq:1,3"], ["complete:1", "empty:2", "complete:2", "cycle:4", "cycle:5", "complete:4"]),
    ("kpq-A", "A", ["path:4", "cycle:5", "kpq:1,3", "complete:1"], ["kpq:1,2", "kpq:2,3", "kpq:3,3", "kpq:1,4"]),
    ("regular-Q", "Q", ["cycle:4", "cycle:5", "petersen", "complete:4"], ["complete:1", "complete:2", "cycle:4", "empty:3"]),
    ("kpq-Q", "Q", ["cycle:4", "cycle:5", "petersen", "cube"], ["kpq:1,2", "kpq:2,3", "kpq:3,3", "kpq:1,4"]),
    ("laplacian", "L", ["cycle:4", "cycle:6", "petersen", "complete:5"], ["complete:1", "path:3", "kpq:1,3", "empty:2"]),
]


@pytest.mark.parametrize("which,kind,g1s,g2s", FAST_DOMAINS, ids=[d[0] for d in FAST_DOMAINS])
def test_fastpaths_agree_with_general(which, kind, g1s, g2s):
    assert {d[0] for d in FAST_DOMAINS} == set(FASTPATHS)
    for g1 in g1s:
        for g2 in g2s:
            fast = fastpath_values(which, G(g1), G(g2))
            general = nc_spectrum(kind, G(g1), G(g2)).roots
            assert fast.shape == general.shape
            assert np.abs(fast - general).max() <= 1e-8, (which, g1, g2)


def test_fastpath_preconditions():
    with pytest.raises(PreconditionError):
        nc_spectrum_fastpath("kpq-A", G("cycle:4"), G("cycle:5"))
    with pytest.raises(PreconditionError):
        nc_spectrum_fastpath("regular-A", G("cycle:4"), G("path:3"))
    with pytest.raises(ValueError):
        nc_spectrum_fastpath("nope", G("cycle:4"), G("path:3"))


def test_edge_corona_examples():
    s3, s13 = math.sqrt(3), math.sqrt(13)
    c4 = edge_corona_l_spectrum(G("cycle:4"), G("complete:1")).values()
    assert np.allclose(c4, sorted([0, 2, 3 - s3, 3 - s3, 3 + s3, 3 + s3, 4, 6]), atol=1e-12)
    assert abs(c4.sum() - 24) < 1e-12
    k3 = edge_corona_l_spectrum(G("complete:3"), G("complete:1")).values()
    assert np.allclose(k3, sorted([0, 4, (7 - s13) / 2, (7 - s13) / 2, (7 + s13) / 2, (7 + s13) / 2]), atol=1e-12)


@pytest.mark.parametrize("g1,g2", [("cycle:4", "complete:1"), ("complete:3", "complete:1"), ("cycle:4", "empty:2"),
                                   ("petersen", "cycle:4"), ("complete:4", "path:2")])
def test_edge_corona_against_oracle(g1, g2):
    rec = verify_against_oracle("L", G(g1), G(g2), product="ec")
    assert rec.passed, rec.to_json()


def test_edge_corona_preconditions():
    with pytest.raises(PreconditionError):
        edge_corona_l_spectrum(G("path:3"), G("complete:1"))
    with pytest.raises(PreconditionError):
        edge_corona_l_spectrum(G("complete:2"), G("complete:1"))  # r1 = 1
    with pytest.raises(PreconditionError):
        verify_against_oracle("A", G("cycle:4"), G("complete:1"), product="ec")


def test_negative_control_wrong_g2():
    closed = nc_spectrum("A", G("cycle:4"), G("complete:2")).roots
    wrong = eigenvalues(matrix_of(neighbourhood_corona(G("cycle:4"), G("union:path:1+complete:1")), "A"))
    rec = compare_spectra(closed, wrong, 1e-8, kind="A", n1=4, n2=2)
    assert not rec.passed and rec.mismatches
    size = compare_spectra(closed, wrong[:-1], 1e-8)
    assert not size.passed and "size mismatch" in size.note


def test_record_json_shape():
    rec = verify_against_oracle("A", G("path:4"), G("path:3"))
    d = rec.to_json()
    assert d["pass"] and d["n1"] == 4 and d["n2"] == 3 and d["max_abs_error"] <= 1e-8


def test_random_pairs_deterministic():
    a, b = random_pairs(5, 4), random_pairs(5, 4)
    assert [(x.edges, y.edges) for x, y in a] == [(x.edges, y.edges) for x, y in b]
    assert all(x.n <= 8 and y.n <= 6 for x, y in a)
