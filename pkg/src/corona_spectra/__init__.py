"""Spectra of neighbourhood and edge corona products, cospectral pairs and expander constructions."""

from .closed_form import (
    PreconditionError,
    edge_corona_l_spectrum,
    nc_spectrum,
    nc_spectrum_fastpath,
    verify_against_oracle,
)
from .coronal import coronal_exact
from .cospectral import generate_cospectral_pair, verify_cospectral
from .graphs import Graph, GraphError, analyze, matrix_of, parse_graph_spec
from .polynomial import IntPolynomial, RationalFunction
from .products import edge_corona, neighbourhood_corona
from .spectral import Spectrum, char_poly_exact, eigensolve_sym

__all__ = [
    "Graph",
    "GraphError",
    "IntPolynomial",
    "PreconditionError",
    "RationalFunction",
    "Spectrum",
    "analyze",
    "char_poly_exact",
    "coronal_exact",
    "edge_corona",
    "edge_corona_l_spectrum",
    "eigensolve_sym",
    "generate_cospectral_pair",
    "matrix_of",
    "nc_spectrum",
    "nc_spectrum_fastpath",
    "neighbourhood_corona",
    "parse_graph_spec",
    "verify_against_oracle",
    "verify_cospectral",
]
