"""Bisection-width and vertex-expansion bounds for G * H, with exhaustive oracles."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from .expander import f_nk
from .graphs import Graph

MAX_ORACLE_ORDER = 20


@dataclass
class BoundsReport:
    bw_lower: float | None = None
    ivx_lower: float | None = None
    bw_exact: int | None = None
    ivx_exact: Fraction | None = None
    iso_exact: Fraction | None = None

    def to_json(self) -> dict:
        d = asdict(self)
        for key in ("ivx_exact", "iso_exact"):
            if d[key] is not None:
                d[key] = {"fraction": str(d[key]), "value": float(d[key])}
        return d


def _fmin(n, k, a_g):
    return min(f_nk(n, k, a_g), f_nk(n, k, 2 * k))


def bisection_bound(m: int, n: int, k: int, a_g: float) -> float:
    """Lower bound on bw(G * H) for |G| = m, |H| = n, G k-regular."""
    order = m * (n + 1)
    if order % 2 == 0:
        factor = order / 8
    else:
        factor = (order * order - 1) / (8 * order)
    return factor * _fmin(n, k, a_g)


def vertex_expansion_bound(n: int, k: int, a_g: float) -> float:
    fm = _fmin(n, k, a_g)
    return fm / ((n + 1) * k + fm)


def _popcount(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x).astype(np.int64)


def brute_force_partition_oracle(g: Graph) -> BoundsReport:
    """Exact bw, vertex expansion i^V and isoperimetric number i by a subset sweep.

    bw minimizes the edge cut over |S| = floor(n/2); for even n only subsets
    containing vertex 0 are visited (S and its complement cut the same edges).
    """
    n = g.n
    if n > MAX_ORACLE_ORDER:
        raise ValueError(f"oracle limited to {MAX_ORACLE_ORDER} vertices, graph has {n}")
    subsets = np.arange(1, 1 << n, dtype=np.int64)
    size = _popcount(subsets)
    cut = np.zeros_like(subsets)
    for u, v in g.edges:
        cut += ((subsets >> u) ^ (subsets >> v)) & 1
    nbr_mask = [sum(1 << w for w in g.neighbours[v]) for v in range(n)]
    reach = np.zeros_like(subsets)
    for v in range(n):
        reach |= np.where((subsets >> v) & 1, nbr_mask[v], 0)
    boundary = _popcount(reach & ~subsets)

    half = n // 2
    pick = size == half
    if n % 2 == 0:
        pick &= (subsets & 1) == 1
    bw = int(cut[pick].min()) if n >= 2 else 0

    small = (size >= 1) & (2 * size <= n)
    ivx = iso = None
    if small.any():
        sz = size[small]
        ivx = min(Fraction(int(b), int(s)) for b, s in _candidates(boundary[small], sz))
        iso = min(Fraction(int(c), int(s)) for c, s in _candidates(cut[small], sz))
    return BoundsReport(bw_exact=bw, ivx_exact=ivx, iso_exact=iso)


def _candidates(num: np.ndarray, den: np.ndarray):
    """Per subset size, the subsets attaining the smallest numerator."""
    for s in np.unique(den):
        yield int(num[den == s].min()), int(s)


def corona_bounds(m: int, n: int, k: int, a_g: float, product: Graph | None = None) -> BoundsReport:
    rep = BoundsReport(bw_lower=bisection_bound(m, n, k, a_g), ivx_lower=vertex_expansion_bound(n, k, a_g))
    if product is not None and product.n <= MAX_ORACLE_ORDER:
        exact = brute_force_partition_oracle(product)
        rep.bw_exact, rep.ivx_exact, rep.iso_exact = exact.bw_exact, exact.ivx_exact, exact.iso_exact
    return rep


def mohar_sandwich(a: float, max_degree: int) -> tuple[float, float]:
    """(a/2, sqrt(a(2*Delta - a))): the bracket that must contain i(G)."""
    return a / 2, float(np.sqrt(max(a * (2 * max_degree - a), 0.0)))
