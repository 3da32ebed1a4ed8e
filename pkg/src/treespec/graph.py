"""
Labeled multigraphs with exact spanning-tree counting.

Two independent counters are provided: `tau` (matrix-tree theorem with a
fraction-free integer determinant) and `tau_brute` (exhaustive search over
acyclic edge subsets). `census_connected` enumerates every labeled simple
graph on up to seven vertices.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidEdge, TooLarge

Edge = tuple[int, int]

BRUTE_BUDGET = 5_000_000
CENSUS_MAX_N = 7


@dataclass(frozen=True)
class MultiGraph:
    """Vertices 0..n-1 and an indexed edge list; loops are dropped on creation."""

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        cleaned = []
        for u, v in self.edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if u == v:
                continue
            cleaned.append((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", tuple(cleaned))

    @property
    def m(self) -> int:
        return len(self.edges)

    def multiplicity(self) -> Counter:
        return Counter(self.edges)

    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def adjacency(self) -> list[list[int]]:
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n

    def add_vertices(self, k: int, edges: Iterable[Edge] = ()) -> "MultiGraph":
        return MultiGraph(self.n + k, self.edges + tuple(edges))

    def relabel(self, perm: Sequence[int]) -> "MultiGraph":
        return MultiGraph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def disjoint_union(self, other: "MultiGraph") -> "MultiGraph":
        off = self.n
        return MultiGraph(self.n + other.n,
                          self.edges + tuple((u + off, v + off) for u, v in other.edges))


def laplacian(g: MultiGraph) -> list[list[int]]:
    lap = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    return lap


def bareiss_det(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination (mutates rows)."""
    n = len(rows)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        row_k = rows[k]
        for i in range(k + 1, n):
            row_i = rows[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def tau(g: MultiGraph) -> int:
    """Number of spanning trees via the matrix-tree theorem (cofactor at vertex 0)."""
    if g.n <= 1:
        return 1
    lap = laplacian(g)
    minor = [row[1:] for row in lap[1:]]
    return bareiss_det(minor)


def tau_brute(g: MultiGraph, budget: int = BRUTE_BUDGET) -> int:
    """Count spanning trees by enumerating (n-1)-edge subsets with a union-find check.

    Subsets are grown in edge-index order and abandoned as soon as they close a
    cycle; an acyclic set of n-1 edges on n vertices is a spanning tree.
    """
    n = g.n
    if n <= 1:
        return 1
    need = n - 1
    edges = g.edges
    m = len(edges)
    if m < need:
        return 0
    parent = list(range(n))
    size = [1] * n

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    count = 0
    steps = 0

    def grow(start, picked):
        nonlocal count, steps
        if picked == need:
            count += 1
            return
        for idx in range(start, m - (need - picked) + 1):
            steps += 1
            if steps > budget:
                raise TooLarge(f"brute-force enumeration exceeded {budget} steps")
            u, v = edges[idx]
            ru, rv = find(u), find(v)
            if ru == rv:
                continue
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            grow(idx + 1, picked + 1)
            size[ru] -= size[rv]
            parent[rv] = rv

    grow(0, 0)
    return count


def _check_edge(g: MultiGraph, e: int):
    if not (0 <= e < g.m):
        raise InvalidEdge(f"edge index {e} out of range (m={g.m})")


def contract(g: MultiGraph, e: int) -> MultiGraph:
    """Merge the endpoints of edge e into the smaller label, shifting higher labels down."""
    _check_edge(g, e)
    keep, gone = g.edges[e]

    def lab(x):
        if x == gone:
            x = keep
        return x - 1 if x > gone else x

    new_edges = tuple((lab(u), lab(v)) for idx, (u, v) in enumerate(g.edges) if idx != e)
    return MultiGraph(g.n - 1, new_edges)


def delete(g: MultiGraph, e: int) -> MultiGraph:
    _check_edge(g, e)
    return MultiGraph(g.n, g.edges[:e] + g.edges[e + 1:])


def degree_profile(g: MultiGraph) -> dict[int, int]:
    """Map degree -> number of vertices with that degree (parallel edges counted)."""
    return dict(sorted(Counter(g.degrees()).items()))


# named small graphs used throughout the tests and docs

def path_graph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> MultiGraph:
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return MultiGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> MultiGraph:
    return MultiGraph(n, tuple(combinations(range(n), 2)))


# census

def _batched_minor_dets(lap: np.ndarray) -> np.ndarray:
    """Exact determinants of a batch of reduced Laplacians (int64 Bareiss).

    Reduced Laplacians are positive semidefinite, so a vanishing leading
    principal minor forces the determinant to vanish; such rows are marked
    dead instead of pivoted.
    """
    batch, d, _ = lap.shape
    if d == 0:
        return np.ones(batch, dtype=np.int64)
    m = lap.copy()
    prev = np.ones(batch, dtype=np.int64)
    alive = np.ones(batch, dtype=bool)
    with np.errstate(over="ignore"):
        for k in range(d - 1):
            piv = m[:, k, k]
            alive &= piv != 0
            piv = np.where(piv == 0, 1, piv)
            sub = m[:, k + 1:, k + 1:] * piv[:, None, None] - m[:, k + 1:, k:k + 1] * m[:, k:k + 1, k + 1:]
            m[:, k + 1:, k + 1:] = sub // prev[:, None, None]
            prev = piv
    return np.where(alive, m[:, d - 1, d - 1], 0)


def _census_chunk(n: int, pairs: list[Edge], start: int, stop: int) -> set[int]:
    masks = np.arange(start, stop, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(len(pairs), dtype=np.int64)) & 1
    lap = np.zeros((len(masks), n, n), dtype=np.int64)
    for p, (i, j) in enumerate(pairs):
        b = bits[:, p]
        lap[:, i, i] += b
        lap[:, j, j] += b
        lap[:, i, j] -= b
        lap[:, j, i] -= b
    dets = _batched_minor_dets(lap[:, 1:, 1:])
    return {int(x) for x in np.unique(dets) if x > 0}


def census_connected(n: int, workers: int | None = None, chunk: int = 1 << 15) -> list[int]:
    """Sorted distinct tau values over all labeled simple connected graphs on n vertices."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > CENSUS_MAX_N:
        raise TooLarge(f"census limited to n <= {CENSUS_MAX_N}")
    pairs = list(combinations(range(n), 2))
    total = 1 << len(pairs)
    ranges = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
    if workers is None:
        workers = int(os.environ.get("TREESPEC_THREADS", "0")) or (os.cpu_count() or 1)
    values: set[int] = set()
    if workers <= 1 or len(ranges) == 1:
        for s, t in ranges:
            values |= _census_chunk(n, pairs, s, t)
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(lambda r: _census_chunk(n, pairs, *r), ranges):
                values |= part
    return sorted(values)


# I/O

def parse_edgelist(text: str) -> MultiGraph:
    """Parse the `n m` header + `u v` lines format; `#` lines are comments."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty edge list")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"bad header line: {lines[0]!r}")
    n, m = int(header[0]), int(header[1])
    body = lines[1:]
    if len(body) != m:
        raise ValueError(f"header announces {m} edges, found {len(body)}")
    edges = []
    for ln in body:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line: {ln!r}")
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise ValueError(f"self-loop not allowed in edge list: {ln!r}")
        edges.append((u, v))
    return MultiGraph(n, tuple(edges))


def read_edgelist(path) -> MultiGraph:
    with open(path) as fh:
        return parse_edgelist(fh.read())


def format_edgelist(g: MultiGraph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def to_dot(g: MultiGraph, highlight: int | None = None, name: str = "G") -> str:
    out = [f"graph {name} {{"]
    for v in range(g.n):
        out.append(f"  {v};")
    for idx, (u, v) in enumerate(g.edges):
        style = " [color=red]" if idx == highlight else ""
        out.append(f"  {u} -- {v}{style};")
    out.append("}")
    return "\n".join(out) + "\n"


def to_json_obj(g: MultiGraph, tau_value: int | None = None) -> dict:
    if tau_value is None:
        tau_value = tau(g)
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges], "tau": str(tau_value)}


def to_json(g: MultiGraph, tau_value: int | None = None) -> str:
    return json.dumps(to_json_obj(g, tau_value))


def from_json(text: str) -> tuple[MultiGraph, int]:
    obj = json.loads(text)
    g = MultiGraph(obj["n"], tuple(tuple(e) for e in obj["edges"]))
    return g, int(obj["tau"])
