from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corona_spectra.coronal import coronal_closed_form, coronal_exact, coronal_value
from corona_spectra.graphs import Graph, matrix_of, parse_graph_spec
from corona_spectra.polynomial import IntPolynomial, RationalFunction
from corona_spectra.spectral import adjugate_coeffs, char_poly_exact

x = IntPolynomial.x()


def test_k2_adjacency():
    unreduced, reduced = coronal_exact(matrix_of(parse_graph_spec("complete:2"), "A"))
    assert unreduced.numerator == 2 * x + 2
    assert unreduced.denominator == x * x - 1
    assert reduced.equals(RationalFunction(IntPolynomial([2]), x - 1))
    assert reduced.denominator.degree == 1


@pytest.mark.parametrize("spec", ["path:4", "cycle:4", "kpq:1,3", "union:path:2+path:2", "empty:4"])
def test_laplacian_coronal_is_n_over_x(spec):
    _, red = coronal_exact(matrix_of(parse_graph_spec(spec), "L"))
    assert red.equals(coronal_closed_form("constant-row-sum", 4, 0))
    assert red.denominator.degree == 1


def test_star_signless():
    _, red = coronal_exact(matrix_of(parse_graph_spec("kpq:1,2"), "Q"))
    assert red.equals(RationalFunction(3 * x - 1, x * x - 3 * x))


def test_closed_form_examples():
    assert coronal_closed_form("constant-row-sum", 2, 1).equals(RationalFunction(IntPolynomial([2]), x - 1))
    assert coronal_closed_form("kpq-A", 1, 2).equals(RationalFunction(3 * x + 4, x * x - 2))
    assert coronal_closed_form("constant-row-sum", 1, 0).equals(RationalFunction(IntPolynomial([1]), x))
    with pytest.raises(ValueError):
        coronal_closed_form("kpq-A", 0, 2)
    with pytest.raises(ValueError):
        coronal_closed_form("spiral", 1)


@pytest.mark.parametrize("spec,kind,shape,params", [
    ("cycle:5", "A", "constant-row-sum", (5, 2)),
    ("petersen", "A", "constant-row-sum", (10, 3)),
    ("complete:4", "Q", "constant-row-sum", (4, 6)),
    ("cube", "L", "constant-row-sum", (8, 0)),
    ("kpq:2,3", "A", "kpq-A", (2, 3)),
    ("kpq:3,3", "A", "kpq-A", (3, 3)),
    ("kpq:1,4", "Q", "kpq-Q", (1, 4)),
    ("kpq:2,3", "Q", "kpq-Q", (2, 3)),
])
def test_exact_matches_closed_form(spec, kind, shape, params):
    _, red = coronal_exact(matrix_of(parse_graph_spec(spec), kind))
    assert red.equals(coronal_closed_form(shape, *params))


def adjugate_numerator(m):
    """1^T adj(xI - M) 1 from the adjugate recurrence, an independent route to N."""
    bs = adjugate_coeffs(m)
    n = len(bs)
    return IntPolynomial([int(bs[n - 1 - d].sum()) for d in range(n)])


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 8), st.floats(0.1, 0.9), st.integers(0, 2**32 - 1), st.sampled_from("ALQ"))
def test_numerator_matches_adjugate_route(n, p, seed, kind):
    rng = np.random.default_rng(seed)
    a = np.triu(rng.random((n, n)) < p, 1)
    m = matrix_of(Graph.from_edges(n, list(zip(*np.nonzero(a)))), kind)
    unreduced, reduced = coronal_exact(m)
    assert unreduced.numerator == adjugate_numerator(m)
    assert unreduced.denominator == char_poly_exact(m)
    assert unreduced.numerator.degree < unreduced.denominator.degree
    # reduced form is the same function
    assert reduced.equals(unreduced)
    norm = int(np.abs(m).sum(axis=1).max()) * n + 1
    for x0 in rng.integers(norm, norm + 100, size=5):
        x0 = int(x0) * (1 if rng.random() < 0.5 else -1)
        assert unreduced(Fraction(x0)) == coronal_value(m, x0)


def test_rejects_non_square():
    with pytest.raises(ValueError):
        coronal_exact(np.zeros((2, 3), dtype=int))
