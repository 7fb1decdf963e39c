"""Expander families from neighbourhood coronae.

Scalar functions (n = order of the copy graph, k = degree of the base graph)::

    f(x) = x + (n+1)k - sqrt((4n+1)x^2 - 2(3n+1)kx + ((n+1)k)^2)
    g(x) = x + nk + 2 - sqrt((x + nk + 2)^2 - 4(n+2)x)
    delta(eps) = min(f(eps), f(2k)) / 2

For a connected k-regular G and a non-complete regular H on n vertices,
a(G * H) = min(f(a(G)), f(mu_max(G))) / 2 >= delta(a(G)), and for the edge
corona a(G <> H) = g(a(G)) / 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .closed_form import PreconditionError
from .graphs import Graph, analyze, matrix_of
from .products import copy_vertex, neighbourhood_corona
from .spectral import eigenvalues


def _sqrt(v):
    if isinstance(v, int) and v >= 0:
        r = math.isqrt(v)
        if r * r == v:
            return r
    return math.sqrt(v)


def f_nk(n: int, k: int, x) -> float:
    rad = (4 * n + 1) * x * x - 2 * (3 * n + 1) * k * x + ((n + 1) * k) ** 2
    return x + (n + 1) * k - _sqrt(rad)


def g_nk(n: int, k: int, x) -> float:
    s = x + n * k + 2
    return s - _sqrt(s * s - 4 * (n + 2) * x)


def delta(n: int, k: int, eps) -> float:
    return 0.5 * min(f_nk(n, k, eps), f_nk(n, k, 2 * k))


def scalar_eval(which: str, n: int, k: int, x) -> float:
    if n < 1 or k < 1:
        raise ValueError("n and k must be >= 1")
    fn = {"f": f_nk, "g": g_nk, "delta": delta}.get(which)
    if fn is None:
        raise ValueError(f"unknown scalar {which!r}; expected f, g or delta")
    return fn(n, k, x)


# -- algebraic connectivity ---------------------------------------------------

@dataclass(frozen=True)
class ConnectivityReport:
    a: float
    mu_max: float
    connected: bool


def algebraic_connectivity(g: Graph) -> ConnectivityReport:
    if g.n < 2:
        raise ValueError("algebraic connectivity needs at least 2 vertices")
    mu = np.sort(eigenvalues(matrix_of(g, "L")))
    a = max(float(mu[1]), 0.0)
    return ConnectivityReport(a, float(mu[-1]), analyze(g).connected)


def _is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def nc_alg_connectivity(g: Graph, h: Graph) -> tuple[float, float]:
    """(exact, lower bound) for a(g * h) from the f-function of (|h|, deg g)."""
    pg = analyze(g)
    if not (pg.is_regular and pg.connected):
        raise PreconditionError("G must be connected and regular")
    if not analyze(h).is_regular:
        raise PreconditionError("H must be regular")
    if _is_complete(h):
        raise PreconditionError("H must not be a complete graph")
    n, k = h.n, pg.regularity
    rep = algebraic_connectivity(g)
    exact = 0.5 * min(f_nk(n, k, rep.a), f_nk(n, k, rep.mu_max))
    lower = 0.5 * min(f_nk(n, k, rep.a), f_nk(n, k, 2 * k))
    return exact, lower


# -- Cayley graphs ------------------------------------------------------------

@dataclass(frozen=True)
class CayleySpec:
    """A finite group by tables plus a symmetric generating set.

    ``mul[i, j]`` is the index of ``elements[i] * elements[j]``.
    """

    elements: tuple
    mul: np.ndarray
    inv: np.ndarray
    identity: int
    gens: tuple[int, ...]
    labels: tuple[str, ...]
    gen_labels: tuple[str, ...] = ()

    def __post_init__(self):
        gs = set(self.gens)
        if len(gs) != len(self.gens):
            raise ValueError("repeated generator")
        if self.identity in gs:
            raise ValueError("identity in generating set")
        if {int(self.inv[s]) for s in gs} != gs:
            raise ValueError("generating set not closed under inverses")

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, element) -> int:
        return self.elements.index(element)

    def to_json(self) -> dict:
        return {
            "elements": [list(e) if isinstance(e, tuple) else e for e in self.elements],
            "labels": list(self.labels),
            "identity": self.identity,
            "gens": list(self.gens),
            "gen_labels": list(self.gen_labels),
        }


def cayley_graph(spec: CayleySpec, gens=None, name=None) -> Graph:
    gens = spec.gens if gens is None else gens
    edges = {(min(x, int(spec.mul[x, s])), max(x, int(spec.mul[x, s]))) for x in range(spec.order) for s in gens}
    return Graph(spec.order, tuple(edges), name)


def cyclic_cayley(n: int, gens=(1, -1)) -> CayleySpec:
    """Z_n with the given (symmetric) connection set."""
    idx = np.arange(n)
    gen_idx = tuple(sorted({g % n for g in gens}))
    return CayleySpec(
        elements=tuple(range(n)),
        mul=(idx[:, None] + idx[None, :]) % n,
        inv=(-idx) % n,
        identity=0,
        gens=gen_idx,
        labels=tuple(str(i) for i in range(n)),
        gen_labels=tuple(str(g) for g in gen_idx),
    )


def sl2_elements(m: int) -> np.ndarray:
    """All 2x2 matrices over Z_m with determinant 1, as rows (a, b, c, d),
    in lexicographic order."""
    grid = np.array(list(product(range(m), repeat=4)), dtype=np.int64)
    det = (grid[:, 0] * grid[:, 3] - grid[:, 1] * grid[:, 2]) % m
    return grid[det == 1 % m]


def sl2_order(m: int) -> int:
    """|SL_2(Z_m)| = m^3 prod_{p | m} (1 - p^-2)."""
    out = m ** 3
    x, p = m, 2
    primes = []
    while p * p <= x:
        if x % p == 0:
            primes.append(p)
            while x % p == 0:
                x //= p
        p += 1
    if x > 1:
        primes.append(x)
    for p in primes:
        out = out * (p * p - 1) // (p * p)
    return out


def sl2_cayley(m: int) -> tuple[CayleySpec, Graph]:
    """Cay(SL_2(Z_m), {a, a^-1, b, b^-1}) with a = [[1,1],[0,1]], b = [[1,0],[1,1]]."""
    if m < 3:
        raise PreconditionError("m must be >= 3: for m = 2 the generators are involutions")
    el = sl2_elements(m)
    code = ((el[:, 0] * m + el[:, 1]) * m + el[:, 2]) * m + el[:, 3]
    lookup = np.full(m ** 4, -1, dtype=np.int64)
    lookup[code] = np.arange(len(el))

    def encode(a, b, c, d):
        return lookup[(((a % m) * m + b % m) * m + c % m) * m + d % m]

    a1, b1, c1, d1 = (el[:, i][:, None] for i in range(4))
    a2, b2, c2, d2 = (el[:, i][None, :] for i in range(4))
    mul = encode(a1 * a2 + b1 * c2, a1 * b2 + b1 * d2, c1 * a2 + d1 * c2, c1 * b2 + d1 * d2)
    inv = encode(el[:, 3], -el[:, 1], -el[:, 2], el[:, 0])
    gens = [int(encode(*g)) for g in ((1, 1, 0, 1), (1, -1, 0, 1), (1, 0, 1, 1), (1, 0, -1, 1))]
    identity = int(encode(1, 0, 0, 1))
    for s in gens:
        if mul[s, s] == identity:
            raise PreconditionError(f"generator {tuple(el[s])} is an involution mod {m}")
    spec = CayleySpec(
        elements=tuple(tuple(int(v) for v in row) for row in el),
        mul=mul,
        inv=inv,
        identity=identity,
        gens=tuple(gens),
        labels=tuple(f"[[{r[0]},{r[1]}],[{r[2]},{r[3]}]]" for r in el),
        gen_labels=("a", "a^-1", "b", "b^-1"),
    )
    return spec, cayley_graph(spec, name=f"Cay(SL2(Z{m}))")


# -- regular augmentations of G * H ---------------------------------------------

def block_augmentation(g: Graph, h: Graph, u: Graph, w: Graph) -> Graph:
    """Make G * H (n+1)k-regular by wiring copies of H along U and W.

    Write r = s*k + t.  Each U-edge (a, b) adds the circulant bipartite graph
    j ~ j + d (d = 1..n-s-1, mod n) between copies a and b; each W-edge adds
    the matching j ~ j.  Offset 0 is never a circulant offset, so the two
    edge sets are disjoint.
    """
    pg, ph = analyze(g), analyze(h)
    if not pg.is_regular or not ph.is_regular:
        raise PreconditionError("G and H must both be regular")
    k, r, n = pg.regularity, ph.regularity, h.n
    if k < 2 or k % 2 or r % 2:
        raise PreconditionError(f"degrees must be even with k >= 2 (k={k}, r={r})")
    s, t = divmod(r, k)
    if t % 2:
        raise PreconditionError(f"t = r mod k must be even, got {t}")
    if u.n != g.n or w.n != g.n:
        raise PreconditionError("U and W must live on the vertex set of G")
    if analyze(u).regularity != k:
        raise PreconditionError(f"U must be {k}-regular")
    if analyze(w).regularity != k - t:
        raise PreconditionError(f"W must be {k - t}-regular")

    base = neighbourhood_corona(g, h)
    m1 = g.n
    existing = set(base.edges)
    added = set()

    def join(i, j, a, b):
        e = (copy_vertex(m1, n, i, a), copy_vertex(m1, n, j, b))
        e = (min(e), max(e))
        if e in existing or e in added:
            raise AssertionError(f"offset collision on edge {e}")
        added.add(e)

    for i, j in u.edges:
        for d in range(1, n - s):
            for a in range(n):
                join(i, j, a, (a + d) % n)
    for i, j in w.edges:
        for a in range(n):
            join(i, j, a, a)
    return Graph(base.n, tuple(existing | added), f"aug({base.name})" if base.name else None)


def cayley_augmentation(g_spec: CayleySpec, h_spec: CayleySpec, s0) -> Graph:
    """The (n+1)k-regular graph on X x (Y + {inf}) built from two Cayley graphs.

    Vertex (x, inf) is ``x``; vertex (x, y) is ``|X| + x*n + y``, so the
    neighbourhood corona Cay(X, S) * Cay(Y, T) is a spanning subgraph under
    the same numbering.  Adjacency, with x' = x s:

    * (x, inf) ~ (x', z) for s in S and every z in Y + {inf}
    * (x, y) ~ (x, y t) for t in T
    * (x, y) ~ (x', z) for s in S and z != y in Y
    * (x, y) ~ (x', y) for s in S0
    """
    S, T = list(g_spec.gens), list(h_spec.gens)
    k, r, n, nx = len(S), len(T), h_spec.order, g_spec.order
    s0 = list(s0)
    if not r < k:
        raise PreconditionError(f"need |T| < |S| (|T|={r}, |S|={k})")
    if len(set(s0)) != k - r:
        raise PreconditionError(f"S0 must have k - r = {k - r} elements, got {len(set(s0))}")
    if not set(s0) <= set(S):
        raise PreconditionError("S0 must be a subset of S")
    if {int(g_spec.inv[s]) for s in s0} != set(s0):
        raise PreconditionError("S0 must be closed under inverses")
    if (n * k) % 2:
        raise PreconditionError("n * k must be even")

    def v(x, y=None):
        return x if y is None else nx + x * n + y

    edges = set()

    def add(p, q):
        edges.add((min(p, q), max(p, q)))

    for x in range(nx):
        for s in S:
            x2 = int(g_spec.mul[x, s])
            add(v(x), v(x2))
            for z in range(n):
                add(v(x), v(x2, z))
                for y in range(n):
                    if y != z:
                        add(v(x, y), v(x2, z))
        for y in range(n):
            for t in T:
                add(v(x, y), v(x, int(h_spec.mul[y, t])))
            for s in s0:
                add(v(x, y), v(int(g_spec.mul[x, s]), y))
    return Graph(nx * (n + 1), tuple(edges))


# -- family certification -----------------------------------------------------

@dataclass
class FamilyMember:
    order: int
    degree: int | None
    connected: bool
    a: float
    a_corona: float | None = None
    lower_bound: float | None = None
    name: str | None = None

    @property
    def monotone(self) -> bool | None:
        if self.a_corona is None:
            return None
        return self.a >= self.a_corona - 1e-9


@dataclass
class FamilyReport:
    n: int
    k: int
    eps: float
    members: list[FamilyMember]
    common_degree: int
    min_a: float
    delta: float
    passed: bool
    diagnostics: list[str] = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "eps": self.eps,
            "common_degree": self.common_degree,
            "min_a": self.min_a,
            "delta": self.delta,
            "pass": self.passed,
            "members": [
                {
                    "name": mb.name,
                    "order": mb.order,
                    "degree": mb.degree,
                    "connected": mb.connected,
                    "a": mb.a,
                    "a_corona": mb.a_corona,
                    "lower_bound": mb.lower_bound,
                    "monotone": mb.monotone,
                }
                for mb in self.members
            ],
            "diagnostics": list(self.diagnostics),
            **self.extras,
        }


def family_report(graphs, n: int, k: int, eps: float, coronas=None, lower_bounds=None) -> FamilyReport:
    """Check every graph is (n+1)k-regular, connected, and has a >= delta(n, k, eps).

    ``coronas`` (same length, optional) are the unaugmented G_i * H; when given
    the augmentation must not lower the algebraic connectivity.
    """
    graphs = list(graphs)
    if not graphs:
        raise ValueError("empty family")
    target = (n + 1) * k
    d = delta(n, k, eps)
    members, diags = [], []
    for i, gr in enumerate(graphs):
        prof = analyze(gr)
        rep = algebraic_connectivity(gr)
        mb = FamilyMember(gr.n, prof.regularity, prof.connected, rep.a, name=gr.name)
        if coronas is not None:
            mb.a_corona = algebraic_connectivity(coronas[i]).a
            if not mb.monotone:
                diags.append(f"graph {i}: augmentation lowered a from {mb.a_corona:.6g} to {mb.a:.6g}")
        if lower_bounds is not None:
            mb.lower_bound = lower_bounds[i]
            if mb.a < lower_bounds[i] - 1e-9:
                diags.append(f"graph {i}: a = {mb.a:.6g} below its bound {lower_bounds[i]:.6g}")
        if prof.regularity != target:
            got = prof.regularity if prof.is_regular else f"irregular {min(prof.degrees)}..{max(prof.degrees)}"
            diags.append(f"graph {i}: degree {got}, expected {target}")
        if not prof.connected:
            diags.append(f"graph {i}: disconnected ({prof.component_count} components)")
        if rep.a < d - 1e-12:
            diags.append(f"graph {i}: a = {rep.a:.6g} < delta = {d:.6g}")
        members.append(mb)
    min_a = min(mb.a for mb in members)
    return FamilyReport(n, k, eps, members, target, min_a, d, not diags, diags)


def sl2_family(ms, n: int = 3, eps: float | None = None) -> FamilyReport:
    """Augmented coronae Cay(SL_2(Z_m), S) * C_n for each m, certified as a family.

    S0 = {a, a^-1}, the generator pair kept on same-coordinate edges.  When
    ``eps`` is None it is the smallest measured a(Cay(SL_2(Z_m), S)).
    """
    h_spec = cyclic_cayley(n, (1, -1))
    h = cayley_graph(h_spec, name=f"C{n}")
    built, coronas, bounds, base_a = [], [], [], []
    k = 4
    for m in ms:
        spec, gm = sl2_cayley(m)
        aug = cayley_augmentation(spec, h_spec, spec.gens[:2]).relabel(f"G^_{m}")
        rep = algebraic_connectivity(gm)
        base_a.append(rep.a)
        built.append(aug)
        coronas.append(neighbourhood_corona(gm, h))
        bounds.append(0.5 * min(f_nk(n, k, rep.a), f_nk(n, k, 2 * k)))
    if eps is None:
        eps = min(base_a)
    report = family_report(built, n, k, eps, coronas=coronas, lower_bounds=bounds)
    report.extras = {
        "ms": list(ms),
        "base_a": base_a,
        # delta without the 1/2 and without the min against f(2k)
        "unhalved_delta": f_nk(n, k, eps),
    }
    return report
