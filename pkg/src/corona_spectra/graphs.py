"""Undirected simple graphs: representation, named builders, matrices, I/O.

Vertex numbering of every builder is fixed so that spectra and matrix dumps
are reproducible:

* ``path``      0-1-2-...-(n-1)
* ``cycle``     path plus the edge (0, n-1)
* ``complete_bipartite`` part of size p is 0..p-1, part of size q is p..p+q-1
* ``petersen``  outer 5-cycle 0..4, inner pentagram 5..9, spokes i ~ i+5
* ``cube``      d-cube on bit vectors 0..2^d-1
* ``rook``      K_n x K_n (Cartesian), cell (i, j) is vertex n*i + j
* ``shrikhande`` Cayley graph on Z4 x Z4, cell (i, j) is vertex 4*i + j
* ``union``     first graph, then the second shifted by its order
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from pathlib import Path

import numpy as np


class GraphError(ValueError):
    """Raised for malformed graphs or invalid builder parameters."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"vertex count must be >= 1, got {self.n}")
        clean = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= self.n:
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            if (u, v) in clean:
                raise GraphError(f"duplicate edge ({u}, {v})")
            clean.add((u, v))
        object.__setattr__(self, "edges", tuple(sorted(clean)))

    @classmethod
    def from_edges(cls, n, edges, name=None) -> "Graph":
        """Build a graph, silently dropping repeated edges."""
        uniq = {(min(u, v), max(u, v)) for u, v in edges}
        return cls(n, tuple(uniq), name)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbours(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.neighbours)

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        if self.edges:
            e = np.array(self.edges)
            a[e[:, 0], e[:, 1]] = 1
            a[e[:, 1], e[:, 0]] = 1
        return a

    def relabel(self, name: str) -> "Graph":
        return Graph(self.n, self.edges, name)

    def __repr__(self):
        label = f"{self.name!r}, " if self.name else ""
        return f"Graph({label}n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    is_regular: bool
    regularity: int | None
    max_degree: int
    component_count: int

    @property
    def connected(self) -> bool:
        return self.component_count == 1


def matrix_of(g: Graph, kind: str) -> np.ndarray:
    """Integer adjacency (``A``), Laplacian (``L``) or signless Laplacian (``Q``)."""
    a = g.adjacency()
    if kind == "A":
        return a
    d = np.diag(np.asarray(g.degrees, dtype=np.int64))
    if kind == "L":
        return d - a
    if kind == "Q":
        return d + a
    raise GraphError(f"unknown matrix kind {kind!r}; expected A, L or Q")


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in g.neighbours[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


def analyze(g: Graph) -> DegreeProfile:
    degs = g.degrees
    regular = len(set(degs)) == 1
    return DegreeProfile(
        degrees=degs,
        is_regular=regular,
        regularity=degs[0] if regular else None,
        max_degree=max(degs),
        component_count=len(components(g)),
    )


def disjoint_union(g: Graph, h: Graph, name=None) -> Graph:
    shifted = [(u + g.n, v + g.n) for u, v in h.edges]
    if name is None and g.name and h.name:
        name = f"{g.name}+{h.name}"
    return Graph(g.n + h.n, tuple(g.edges) + tuple(shifted), name)


def cartesian_product(g: Graph, h: Graph, name=None) -> Graph:
    """Box product; vertex (i, j) is ``i * h.n + j``."""
    edges = []
    for i in range(g.n):
        for u, v in h.edges:
            edges.append((i * h.n + u, i * h.n + v))
    for u, v in g.edges:
        for j in range(h.n):
            edges.append((u * h.n + j, v * h.n + j))
    return Graph(g.n * h.n, tuple(edges), name)


def count_cliques(g: Graph, size: int) -> int:
    """Number of complete subgraphs on ``size`` vertices (small graphs only)."""
    nbrs = [set(a) for a in g.neighbours]
    count = 0

    def extend(clique, candidates):
        nonlocal count
        if len(clique) == size:
            count += 1
            return
        for v in sorted(candidates):
            if clique and v < clique[-1]:
                continue
            extend(clique + [v], candidates & nbrs[v])

    extend([], set(range(g.n)))
    return count


def _need(params, count, kind):
    if len(params) != count:
        raise GraphError(f"{kind} takes {count} integer parameter(s), got {list(params)}")
    return [int(p) for p in params]


def _path(n):
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)), f"P{n}")


def _cycle(n):
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)), f"C{n}")


def _complete(n):
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, tuple(combinations(range(n), 2)), f"K{n}")


def _complete_bipartite(p, q):
    if p < 1 or q < 1:
        raise GraphError("complete_bipartite needs p, q >= 1")
    return Graph(p + q, tuple((i, p + j) for i in range(p) for j in range(q)), f"K{p},{q}")


def _empty(n):
    if n < 1:
        raise GraphError("empty graph needs n >= 1")
    return Graph(n, (), f"{n}K1")


def _petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, tuple(outer + inner + spokes), "Petersen")


def _cube(d=3):
    if d < 1:
        raise GraphError("cube needs dimension >= 1")
    edges = [(v, v ^ (1 << b)) for v in range(1 << d) for b in range(d) if v < v ^ (1 << b)]
    return Graph(1 << d, tuple(edges), f"Q{d}")


def _rook(n):
    if n < 2:
        raise GraphError("rook needs n >= 2")
    return cartesian_product(_complete(n), _complete(n), name=f"Rook{n}")


def _shrikhande():
    conn = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)]
    edges = set()
    for i in range(4):
        for j in range(4):
            for di, dj in conn:
                u, v = 4 * i + j, 4 * ((i + di) % 4) + (j + dj) % 4
                edges.add((min(u, v), max(u, v)))
    return Graph(16, tuple(edges), "Shrikhande")


_BUILDERS = {
    "path": (1, _path),
    "cycle": (1, _cycle),
    "complete": (1, _complete),
    "complete_bipartite": (2, _complete_bipartite),
    "empty": (1, _empty),
    "petersen": (0, _petersen),
    "cube": (None, _cube),
    "rook": (1, _rook),
    "shrikhande": (0, _shrikhande),
}

BUILDER_NAMES = tuple(sorted(_BUILDERS))


def build_named(kind: str, params=()) -> Graph:
    """Build one of the stock graphs listed in the module docstring.

    >>> build_named("path", [4]).m
    3
    """
    if kind not in _BUILDERS:
        raise GraphError(f"unknown builder {kind!r}; known: {', '.join(BUILDER_NAMES)}")
    arity, fn = _BUILDERS[kind]
    params = list(params)
    if arity is None:
        if len(params) > 1:
            raise GraphError(f"{kind} takes at most one parameter")
        return fn(*[int(p) for p in params])
    return fn(*_need(params, arity, kind))


# Stock seeds for the cospectral factory and the CLI's ``builtin:`` syntax.
BUILTINS = {
    "k14": lambda: _complete_bipartite(1, 4),
    "c4uk1": lambda: disjoint_union(_cycle(4), _complete(1), name="C4+K1"),
    "petersen": _petersen,
    "cube": _cube,
    "shrikhande": _shrikhande,
    "rook4": lambda: _rook(4),
}

_SHORT = {
    "path": "path", "cycle": "cycle", "complete": "complete", "kn": "complete",
    "kpq": "complete_bipartite", "bipartite": "complete_bipartite", "empty": "empty",
    "rook": "rook", "cube": "cube",
}


def _split_top(arg: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in arg:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "+" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_graph_spec(arg: str) -> Graph:
    """Parse builder syntax: ``path:4``, ``kpq:2,3``, ``builtin:shrikhande``,
    ``union:cycle:4+complete:1``, ``file:graph.json``."""
    arg = arg.strip()
    if arg.startswith("(") and arg.endswith(")"):
        arg = arg[1:-1]
    kind, _, rest = arg.partition(":")
    kind = kind.lower()
    if kind == "file":
        return load_json(rest)
    if kind == "builtin":
        if rest not in BUILTINS:
            raise GraphError(f"unknown builtin {rest!r}; known: {', '.join(sorted(BUILTINS))}")
        return BUILTINS[rest]()
    if kind == "union":
        parts = _split_top(rest)
        if len(parts) < 2:
            raise GraphError("union needs at least two graphs joined by '+'")
        g = parse_graph_spec(parts[0])
        for p in parts[1:]:
            g = disjoint_union(g, parse_graph_spec(p))
        return g
    if kind in ("petersen", "shrikhande"):
        return build_named(kind)
    if kind not in _SHORT:
        raise GraphError(f"cannot parse graph argument {arg!r}")
    try:
        params = [int(p) for p in rest.split(",")] if rest else []
    except ValueError:
        raise GraphError(f"non-integer parameters in {arg!r}") from None
    return build_named(_SHORT[kind], params)


def to_dict(g: Graph) -> dict:
    d = {}
    if g.name is not None:
        d["name"] = g.name
    d["n"] = g.n
    d["edges"] = [list(e) for e in g.edges]
    return d


def from_dict(d: dict) -> Graph:
    try:
        n = int(d["n"])
        edges = tuple(tuple(e) for e in d["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from None
    for e in edges:
        if len(e) != 2:
            raise GraphError(f"malformed edge {list(e)}")
    return Graph(n, edges, d.get("name"))


def to_json(g: Graph) -> str:
    return json.dumps(to_dict(g))


def from_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from None
    return from_dict(data)


def load_json(path) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GraphError(f"cannot read graph file {path}: {exc}") from None
    return from_json(text)


def to_dot(g: Graph) -> str:
    lines = [f'graph "{g.name or "G"}" {{']
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"


def random_graph(n: int, p: float, rng: np.random.Generator, name=None) -> Graph:
    """Erdos-Renyi G(n, p) drawn from ``rng``; pair order is lexicographic."""
    pairs = list(combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p if pairs else np.zeros(0, dtype=bool)
    return Graph(n, tuple(e for e, k in zip(pairs, keep) if k), name)
