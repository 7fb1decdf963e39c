"""Closed-form spectra of neighbourhood and edge coronae, and the oracle check.

The general routine factors the characteristic polynomial of G1 * G2 into
one degree-(n2+1) polynomial per eigenvalue of G1,

    p_i(x) = (x - c_i) * D(x - s) - w_i * N(x - s),

where (N, D) is the unreduced coronal of the relevant matrix of G2 and

    kind A:  s = 0,   c_i = lambda_i,           w_i = lambda_i^2
    kind Q:  s = r1,  c_i = n2*r1 + nu_i,       w_i = (nu_i - r1)^2
    kind L:  s = r1,  c_i = n2*r1 + mu_i,       w_i = (r1 - mu_i)^2

For root extraction each p_i is split as G(x - s) * p_i'(x) with
G = gcd(N, D) computed exactly, so repeated eigenvalues of G2 never reach
the floating-point companion solver.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .coronal import coronal_exact
from .graphs import Graph, analyze, components, matrix_of
from .polynomial import IntPolynomial, exact_quotient
from .products import edge_corona, neighbourhood_corona
from .spectral import (
    DEFAULT_CLUSTER_TOL,
    Spectrum,
    cluster_spectrum,
    eigenvalues,
    int_poly_real_roots,
    poly_real_roots,
)

DEFAULT_TOL = 1e-8

_FACTORIZATION = {
    "A": "adjacency factorization (arbitrary G1, G2)",
    "Q": "signless Laplacian factorization (regular G1)",
    "L": "Laplacian factorization (regular G1)",
}


class PreconditionError(ValueError):
    """A hypothesis of the requested formula does not hold for the input."""


@dataclass(frozen=True)
class FactoredCharPoly:
    kind: str
    outer_factors: tuple[np.ndarray, ...]
    provenance: str
    roots: np.ndarray
    assembled_spectrum: Spectrum

    @property
    def order(self) -> int:
        return sum(len(f) - 1 for f in self.outer_factors)

    def evaluate(self, x0: float) -> float:
        """Product of all outer factors at x0."""
        out = 1.0
        for f in self.outer_factors:
            out *= float(np.polyval(f[::-1], x0))
        return out


def _regular_degree(g: Graph, who: str, min_order: int = 2, min_degree: int = 1) -> int:
    prof = analyze(g)
    if not prof.is_regular:
        raise PreconditionError(f"{who} must be regular (degrees {sorted(set(prof.degrees))})")
    if g.n < min_order:
        raise PreconditionError(f"{who} needs at least {min_order} vertices, has {g.n}")
    if prof.regularity < min_degree:
        raise PreconditionError(f"{who} must have degree >= {min_degree}, has {prof.regularity}")
    return prof.regularity


def _as_float_poly(p: IntPolynomial, length: int) -> np.ndarray:
    out = np.zeros(length)
    out[: len(p.coeffs)] = p.to_float()
    return out


def _coupled_factor(c: float, w: float, den: np.ndarray, num: np.ndarray) -> np.ndarray:
    """Ascending coefficients of (x - c) * den(x) - w * num(x)."""
    out = np.zeros(len(den) + 1)
    out[1:] += den
    out[:-1] -= c * den
    out[: len(num)] -= w * num
    return out


def nc_spectrum(kind: str, g1: Graph, g2: Graph, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> FactoredCharPoly:
    """A-, L- or Q-spectrum of ``neighbourhood_corona(g1, g2)`` from the factors."""
    if kind not in _FACTORIZATION:
        raise ValueError(f"unknown spectrum kind {kind!r}")
    n2 = g2.n
    if kind == "A":
        shift = 0
        lam = eigenvalues(matrix_of(g1, "A"))
        cs, ws = lam, lam ** 2
    else:
        r1 = _regular_degree(g1, "G1")
        shift = r1
        ev = eigenvalues(matrix_of(g1, kind))
        cs = n2 * r1 + ev
        ws = (ev - r1) ** 2

    full, den = coronal_exact(matrix_of(g2, kind))
    common = exact_quotient(full.denominator, den.denominator)
    common_roots = np.array(int_poly_real_roots(common).real) + shift

    d_full = _as_float_poly(full.denominator.shifted(shift), n2 + 1)
    n_full = _as_float_poly(full.numerator.shifted(shift), n2 + 1)
    d_red = den.denominator.shifted(shift)
    n_red = den.numerator.shifted(shift)
    d_red_f = _as_float_poly(d_red, d_red.degree + 1)
    n_red_f = _as_float_poly(n_red, d_red.degree + 1)
    d_red_roots = int_poly_real_roots(d_red).real

    factors, roots = [], []
    for c, w in zip(cs, ws):
        factors.append(_coupled_factor(c, w, d_full, n_full))
        roots.extend(common_roots)
        if w <= 1e-24 * (1 + c * c):
            # decoupled copy: the factor is (x - c) * D(x - s) up to rounding
            roots.append(float(c))
            roots.extend(d_red_roots)
            continue
        r = poly_real_roots(_coupled_factor(c, w, d_red_f, n_red_f))
        if r.complex:
            raise ArithmeticError(f"non-real roots {r.complex} in a symmetric-matrix factor (c={c}, w={w})")
        roots.extend(r.real)
    roots = np.sort(np.asarray(roots, dtype=float))
    return FactoredCharPoly(kind, tuple(factors), _FACTORIZATION[kind], roots, cluster_spectrum(roots, cluster_tol))


# -- special-case fast paths ----------------------------------------------------

FASTPATHS = ("regular-A", "kpq-A", "regular-Q", "kpq-Q", "laplacian")


def complete_bipartite_parts(g: Graph) -> tuple[int, int] | None:
    """(p, q) if ``g`` is K_{p,q}, else None."""
    comps = components(g)
    if len(comps) != 1 or g.n < 2:
        return None
    colour = {0: 0}
    stack = [0]
    while stack:
        u = stack.pop()
        for v in g.neighbours[u]:
            if v not in colour:
                colour[v] = 1 - colour[u]
                stack.append(v)
            elif colour[v] == colour[u]:
                return None
    p = sum(1 for c in colour.values() if c == 0)
    q = g.n - p
    return (p, q) if g.m == p * q else None


def _real_quadratic(b: float, c: float, scale: float = 1.0) -> tuple[float, float]:
    """Roots of x^2 - b x + c."""
    disc = b * b - 4 * c
    if disc < 0:
        if disc < -1e-9 * (1 + scale * scale):
            raise ArithmeticError(f"negative discriminant {disc}")
        disc = 0.0
    s = math.sqrt(disc)
    return (b - s) / 2, (b + s) / 2


def _cubic_roots(coeffs) -> list[float]:
    r = poly_real_roots(coeffs)
    if r.complex:
        raise ArithmeticError(f"non-real cubic roots {r.complex}")
    return r.real


def _kpq(g2) -> tuple[int, int]:
    if isinstance(g2, tuple):
        p, q = g2
    else:
        parts = complete_bipartite_parts(g2)
        if parts is None:
            raise PreconditionError("G2 must be a complete bipartite graph K_{p,q}")
        p, q = parts
    if p < 1 or q < 1:
        raise PreconditionError("K_{p,q} needs p, q >= 1")
    return p, q


def nc_spectrum_fastpath(which: str, g1: Graph, g2, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> Spectrum:
    """Spectrum of G1 * G2 from the explicit eigenvalue lists of the special cases.

    ``which`` is one of :data:`FASTPATHS`; for the ``kpq-*`` cases ``g2`` may
    be a graph K_{p,q} or the tuple (p, q).  The ``regular-A`` case uses the
    discriminant (lambda - r2)^2 + 4 n2 lambda^2.
    """
    vals: list[float] = []
    n1 = g1.n
    if which == "regular-A":
        r2 = _regular_degree(g2, "G2", min_order=1, min_degree=0)
        n2 = g2.n
        lam2 = np.sort(eigenvalues(matrix_of(g2, "A")))[::-1]
        vals += list(np.repeat(lam2[1:], n1))
        for lam in eigenvalues(matrix_of(g1, "A")):
            vals += _real_quadratic(lam + r2, lam * r2 - n2 * lam * lam, abs(lam) + r2)
    elif which == "kpq-A":
        p, q = _kpq(g2)
        vals += [0.0] * (n1 * (p + q - 2))
        for lam in eigenvalues(matrix_of(g1, "A")):
            vals += _cubic_roots([-p * q * lam * (2 * lam - 1), -(p * q + (p + q) * lam * lam), -lam, 1.0])
    elif which == "regular-Q":
        r1 = _regular_degree(g1, "G1")
        r2 = _regular_degree(g2, "G2", min_order=1, min_degree=0)
        n2 = g2.n
        nu2 = np.sort(eigenvalues(matrix_of(g2, "Q")))
        vals += list(np.repeat(r1 + nu2[:-1], n1))
        for nu in eigenvalues(matrix_of(g1, "Q")):
            b = (n2 + 1) * r1 + 2 * r2 + nu
            c = 2 * n2 * r1 * r2 + (2 * n2 * r1 + 2 * r2 + r1) * nu - n2 * nu * nu
            vals += _real_quadratic(b, c, b)
    elif which == "kpq-Q":
        r = _regular_degree(g1, "G1")
        p, q = _kpq(g2)
        vals += [float(p + r)] * (n1 * (q - 1)) + [float(q + r)] * (n1 * (p - 1))
        x = np.polynomial.Polynomial
        for nu in eigenvalues(matrix_of(g1, "Q")):
            lhs = x([-r, 1]) * x([-r - p - q, 1]) * x([-(p + q) * r - nu, 1])
            rhs = x([-(p + q) * r - (p - q) ** 2, p + q]) * (nu - r) ** 2
            vals += _cubic_roots((lhs - rhs).coef)
    elif which == "laplacian":
        r1 = _regular_degree(g1, "G1")
        n2 = g2.n
        mu2 = np.sort(eigenvalues(matrix_of(g2, "L")))
        vals += list(np.repeat(r1 + mu2[1:], n1))
        for mu in eigenvalues(matrix_of(g1, "L")):
            b = (n2 + 1) * r1 + mu
            vals += _real_quadratic(b, mu * ((2 * n2 + 1) * r1 - n2 * mu), b)
    else:
        raise ValueError(f"unknown fast path {which!r}; expected one of {FASTPATHS}")
    return cluster_spectrum(vals, cluster_tol)


def fastpath_values(which, g1, g2) -> np.ndarray:
    """Unclustered sorted eigenvalues from a fast path."""
    return nc_spectrum_fastpath(which, g1, g2, cluster_tol=1e-14).values()


def regular_a_discriminants(g1: Graph, g2: Graph) -> dict:
    """Compare the linear-in-lambda discriminant (lambda - r2)^2 + 4 n2 lambda
    with the squared one derived from x - lambda - n2 lambda^2 / (x - r2) = 0.

    The linear form goes negative (complex eigenvalues of a symmetric matrix)
    whenever lambda is sufficiently negative, which flags it as wrong.
    """
    r2 = _regular_degree(g2, "G2")
    n2 = g2.n
    rows = []
    for lam in np.sort(eigenvalues(matrix_of(g1, "A"))):
        linear = (lam - r2) ** 2 + 4 * n2 * lam
        squared = (lam - r2) ** 2 + 4 * n2 * lam * lam
        rows.append({
            "lambda": float(lam),
            "linear_discriminant": float(linear),
            "squared_discriminant": float(squared),
            "linear_gives_complex": bool(linear < -1e-12),
        })
    return {
        "g1": g1.name, "g2": g2.name, "n2": n2, "r2": r2, "rows": rows,
        "linear_form_complex": any(r["linear_gives_complex"] for r in rows),
        "squared_form_complex": any(r["squared_discriminant"] < -1e-12 for r in rows),
    }


# -- edge corona ---------------------------------------------------------------

def edge_corona_l_spectrum(g1: Graph, g2: Graph, cluster_tol: float = DEFAULT_CLUSTER_TOL) -> Spectrum:
    """L-spectrum of ``edge_corona(g1, g2)`` for r1-regular G1 (r1 >= 2), regular G2."""
    r1 = _regular_degree(g1, "G1", min_order=1, min_degree=2)
    _regular_degree(g2, "G2", min_order=1, min_degree=0)
    n1, m1, n2 = g1.n, g1.m, g2.n
    vals = [2.0] * (m1 - n1)
    mu2 = np.sort(eigenvalues(matrix_of(g2, "L")))
    vals += list(np.repeat(2 + mu2[1:], m1))
    for mu in eigenvalues(matrix_of(g1, "L")):
        b = r1 * n2 + mu + 2
        vals += _real_quadratic(b, (n2 + 2) * mu, b)
    return cluster_spectrum(vals, cluster_tol)


# -- oracle comparison ---------------------------------------------------------

@dataclass
class VerificationRecord:
    kind: str
    n1: int
    n2: int
    max_abs_error: float | None
    passed: bool
    multiplicities_agree: bool
    mismatches: list[tuple[float, float]] = field(default_factory=list)
    product: str = "nc"
    note: str = ""

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "product": self.product,
            "n1": self.n1,
            "n2": self.n2,
            "max_abs_error": self.max_abs_error,
            "pass": self.passed,
            "multiplicities_agree": self.multiplicities_agree,
            "mismatches": [[a, b] for a, b in self.mismatches],
            "note": self.note,
        }


def compare_spectra(closed, oracle, tol: float = DEFAULT_TOL, cluster_tol: float = DEFAULT_CLUSTER_TOL,
                    **meta) -> VerificationRecord:
    """Match two multisets in sorted order (optimal for the max deviation)."""
    a = np.sort(np.asarray(closed, dtype=float))
    b = np.sort(np.asarray(oracle, dtype=float))
    meta.setdefault("kind", "?")
    meta.setdefault("n1", 0)
    meta.setdefault("n2", 0)
    if a.shape != b.shape:
        return VerificationRecord(max_abs_error=None, passed=False, multiplicities_agree=False,
                                  note=f"size mismatch: {a.size} closed-form vs {b.size} oracle", **meta)
    dev = np.abs(a - b)
    err = float(dev.max()) if dev.size else 0.0
    bad = [(float(x), float(y)) for x, y, d in zip(a, b, dev) if d > tol]
    mult_a = [m for _, m in cluster_spectrum(a, cluster_tol).entries]
    mult_b = [m for _, m in cluster_spectrum(b, cluster_tol).entries]
    agree = mult_a == mult_b
    return VerificationRecord(max_abs_error=err, passed=err <= tol and agree, multiplicities_agree=agree,
                              mismatches=bad, **meta)


def verify_against_oracle(kind: str, g1: Graph, g2: Graph, tol: float = DEFAULT_TOL,
                          product: str = "nc", cluster_tol: float = DEFAULT_CLUSTER_TOL) -> VerificationRecord:
    """Build the product explicitly, eigensolve, and compare with the closed form.

    ``product`` is ``nc`` (neighbourhood corona, kinds A/L/Q) or ``ec``
    (edge corona, kind L).
    """
    if product == "nc":
        closed = nc_spectrum(kind, g1, g2, cluster_tol).roots
        built = neighbourhood_corona(g1, g2)
    elif product == "ec":
        if kind != "L":
            raise PreconditionError("only the L-spectrum of an edge corona has a closed form")
        closed = edge_corona_l_spectrum(g1, g2, cluster_tol=1e-14).values()
        built = edge_corona(g1, g2)
    else:
        raise ValueError(f"unknown product {product!r}")
    oracle = eigenvalues(matrix_of(built, kind))
    return compare_spectra(closed, oracle, tol, cluster_tol, kind=kind, n1=g1.n, n2=g2.n, product=product)


def random_pairs(seed: int, count: int = 20, max_n1: int = 8, max_n2: int = 6) -> list[tuple[Graph, Graph]]:
    """Seeded (G1, G2) pairs with uniform orders and edge density in [0.2, 0.8]."""
    from .graphs import random_graph

    rng = np.random.default_rng(seed)
    out = []
    for i in range(count):
        n1 = int(rng.integers(1, max_n1 + 1))
        n2 = int(rng.integers(1, max_n2 + 1))
        g1 = random_graph(n1, float(rng.uniform(0.2, 0.8)), rng, name=f"R{i}a")
        g2 = random_graph(n2, float(rng.uniform(0.2, 0.8)), rng, name=f"R{i}b")
        out.append((g1, g2))
    return out
