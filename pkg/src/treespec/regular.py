"""
k-regular graphs with many distinct spanning-tree counts.

Base graphs come from repeated cycle gluing on a witness edge:

* k = 3: words A^a1 C ... A^at C with a_i >= 1, realised by gluing cycles;
  every vertex has degree 2 or 3.
* k >= 4: every glue after the first is preceded by a kept triangle
  (matrix factor A^(i-1) C B), so every vertex has degree 2 or 4.

Bases are grouped by (vertex count, number of degree-2 vertices). Within a
group every base receives the same pendant gadgets, so the tree counts are
all scaled by one common factor and stay distinct.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .algebra import FeasVec
from .errors import Infeasible, TooLarge
from .graph import MultiGraph, complete_graph, degree_profile, tau
from .witness import (OpLetter, OpWord, WitnessGraph, apply_op, cycle_glue, format_word,
                      glue_path, initial_witness, predicted_vector)

log = logging.getLogger(__name__)

MAX_BASE_VERTICES = 22
VARIANTS = ("H", "Hprime", "Hdoubleprime")


@dataclass(frozen=True)
class PendantSpec:
    k: int
    variant: str = "H"
    extra: int = 0


def circulant(n: int, k: int) -> MultiGraph:
    """A k-regular circulant on n vertices (antipodal matching added for odd k)."""
    if n <= k or (n * k) % 2:
        raise Infeasible(f"no {k}-regular circulant on {n} vertices")
    edges = []
    for off in range(1, k // 2 + 1):
        edges.extend((v, (v + off) % n) for v in range(n))
    if k % 2:
        edges.extend((v, v + n // 2) for v in range(n // 2))
    return MultiGraph(n, tuple(edges))


def _open_path_and_cap(seed: MultiGraph, k: int) -> MultiGraph:
    # remove the path 0-1-...-(k-1) and join a new apex to all of its vertices
    path = {(j, j + 1) for j in range(k - 1)}
    kept = [e for e in seed.edges if e not in path]
    if len(kept) != seed.m - (k - 1):
        raise Infeasible("seed graph does not contain the path 0..k-1")
    apex = seed.n
    return MultiGraph(seed.n + 1, tuple(kept) + tuple((j, apex) for j in range(k)))


def pendant(spec: PendantSpec) -> MultiGraph:
    """Near-k-regular gadget: H and H'' have k-2 vertices of degree k-1, H' has k-4."""
    k = spec.k
    if k < 3:
        raise Infeasible("k must be at least 3")
    if spec.variant not in VARIANTS:
        raise ValueError(f"unknown pendant variant {spec.variant!r}")
    if spec.extra < 0:
        raise ValueError("extra must be non-negative")
    if spec.variant != "Hdoubleprime" and spec.extra:
        raise ValueError("only Hdoubleprime takes extra vertices")
    if spec.variant == "Hdoubleprime":
        seed = circulant(k + 1 + spec.extra, k)
    else:
        seed = complete_graph(k + 1)
    h = _open_path_and_cap(seed, k)
    if spec.variant == "Hprime":
        if k < 5:
            raise Infeasible("H' needs k >= 5")
        h = MultiGraph(h.n, h.edges + ((1, 2),))
    return h


def deficient_vertices(h: MultiGraph, k: int) -> list[int]:
    return [v for v, d in enumerate(h.degrees()) if d == k - 1]


def attachment_block(spec: PendantSpec) -> MultiGraph:
    """The pendant plus an apex joined to its deficient vertices (a block at the cut vertex)."""
    h = pendant(spec)
    apex = h.n
    return MultiGraph(h.n + 1, h.edges + tuple((v, apex) for v in deficient_vertices(h, spec.k)))


# base families

@dataclass(frozen=True)
class Base:
    word: OpWord
    glues: tuple[int, ...]  # cycle sizes i, leftmost (last performed) first
    m: int
    deg2: int
    vector: FeasVec

    @property
    def tau(self) -> int:
        return self.vector.t + self.vector.u


def _compositions(total: int, parts: int, low: int) -> Iterator[tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(low, total - low * (parts - 1) + 1):
        for rest in _compositions(total - first, parts - 1, low):
            yield (first,) + rest


def _deg23_word(glues) -> OpWord:
    word: list[OpLetter] = []
    for i in glues:
        word.extend([OpLetter.Subdivide] * (i - 1))
        word.append(OpLetter.TriangleMove)
    return tuple(word)


def _deg24_word(glues) -> OpWord:
    word: list[OpLetter] = []
    for idx, i in enumerate(glues):
        word.extend([OpLetter.Subdivide] * (i - 1))
        word.append(OpLetter.TriangleMove)
        if idx < len(glues) - 1:
            word.append(OpLetter.TriangleKeep)
    return tuple(word)


def deg23_bases(max_vertices: int) -> Iterator[Base]:
    """All cycle-glue words (every a_i >= 1) whose graphs have at most max_vertices vertices."""
    for weight in range(2, max_vertices - 1):
        for t in range(1, weight // 2 + 1):
            for glues in _compositions(weight, t, 2):
                word = _deg23_word(glues)
                m = weight + 2
                yield Base(word, glues, m, m - 2 * (t - 1), predicted_vector(word))


def deg24_bases(max_vertices: int) -> Iterator[Base]:
    """Words (A^(i-1) C B)... A^(i0-1) C with every i >= 2; degrees are 2 or 4."""
    for m in range(4, max_vertices + 1):
        # m = 2 + sum(i) + s where s = number of kept triangles
        for s in range(0, (m - 4) // 3 + 1):
            for glues in _compositions(m - 2 - s, s + 1, 2):
                word = _deg24_word(glues)
                yield Base(word, glues, m, m - 2 * s, predicted_vector(word))


def bases_for(k: int, max_vertices: int) -> Iterator[Base]:
    return deg23_bases(max_vertices) if k == 3 else deg24_bases(max_vertices)


def build_base(k: int, base: Base) -> WitnessGraph:
    w = initial_witness()
    for idx, i in enumerate(reversed(base.glues)):
        if k == 3:
            w = cycle_glue(w, i)
        else:
            if idx:
                w = apply_op(w, OpLetter.TriangleKeep)
            w = glue_path(w, i)
    return w


def build_deg23_family(budget: int) -> list[tuple[OpWord, WitnessGraph]]:
    """Every max-degree-3 cycle-glue witness on at most `budget` vertices."""
    if budget > MAX_BASE_VERTICES:
        raise TooLarge(f"budget limited to {MAX_BASE_VERTICES} vertices")
    return [(b.word, build_base(3, b)) for b in deg23_bases(budget)]


def build_deg24_family(budget: int) -> list[tuple[OpWord, WitnessGraph]]:
    if budget > MAX_BASE_VERTICES:
        raise TooLarge(f"budget limited to {MAX_BASE_VERTICES} vertices")
    return [(b.word, build_base(4, b)) for b in deg24_bases(budget)]


# assembly

def assembled_size(k: int, m: int, deg2: int) -> int:
    """Vertex count after attaching one (k+2)-vertex pendant per deficient base vertex."""
    padded = deg2 if k <= 4 else m
    return m + (k + 2) * padded


def _size_lower_bound(k: int, m: int) -> int:
    # smallest assembled size of any base on exactly m vertices
    if k == 3:
        return m + 20
    if k == 4:
        return 3 * m + 16
    return m * (k + 3)


def _groups(k: int, max_vertices: int) -> dict[tuple[int, int], list[Base]]:
    groups: dict[tuple[int, int], dict[int, Base]] = {}
    for b in bases_for(k, max_vertices):
        groups.setdefault((b.m, b.deg2), {}).setdefault(b.tau, b)
    return {key: list(by_tau.values()) for key, by_tau in groups.items()}


def _max_base_for(k: int, n: int) -> int:
    m = 3
    while _size_lower_bound(k, m + 1) <= n and m + 1 <= MAX_BASE_VERTICES:
        m += 1
    return m


def smallest_feasible_n(k: int, min_members: int = 2) -> int:
    """Smallest n at which assemble_regular yields at least min_members graphs."""
    if k < 3:
        raise Infeasible("k must be at least 3")
    best = None
    for budget in range(4, MAX_BASE_VERTICES + 1):
        for (m, deg2), members in _groups(k, budget).items():
            if len(members) >= min_members:
                size = assembled_size(k, m, deg2)
                if best is None or size < best:
                    best = size
        if best is not None and best <= _size_lower_bound(k, budget + 1):
            return best
    raise TooLarge(f"no family of {min_members} found with bases up to {MAX_BASE_VERTICES} vertices")


@dataclass
class RegularFamily:
    k: int
    n: int
    members: list[MultiGraph]
    tau_values: list[int]
    words: list[str]
    base_taus: list[int]
    group: tuple[int, int]
    extra: int
    block_taus: dict[str, int] = field(default_factory=dict)

    def manifest(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "members": [
                {"edges": [[u, v] for u, v in g.edges], "tau": str(t), "word": w}
                for g, t, w in zip(self.members, self.tau_values, self.words)
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.manifest())


def attach_pendants(k: int, base: MultiGraph, extra: int = 0) -> MultiGraph:
    """Raise every base vertex to degree k with pendant gadgets.

    Degree-2 vertices get H joined to its k-2 deficient vertices (for k = 3
    that is a single bridge); degree-4 vertices get H' joined to its k-4
    deficient vertices when k >= 5. With extra > 0 the first H is an H''.
    """
    g = base
    padded = False
    for v, d in enumerate(base.degrees()):
        if d == 2:
            spec = PendantSpec(k, "H")
            if extra and not padded:
                spec = PendantSpec(k, "Hdoubleprime", extra)
                padded = True
        elif d == 4 and k >= 5:
            spec = PendantSpec(k, "Hprime")
        elif d == k:
            continue
        else:
            raise Infeasible(f"base vertex {v} has degree {d}, cannot pad to {k}")
        h = pendant(spec)
        off = g.n
        links = tuple((v, off + x) for x in deficient_vertices(h, k))
        g = MultiGraph(g.n + h.n, g.edges + tuple((x + off, y + off) for x, y in h.edges) + links)
    if extra and not padded:
        raise Infeasible("no degree-2 vertex available for padding")
    return g


def assemble_regular(k: int, n: int, max_members: int | None = None) -> RegularFamily:
    """Connected k-regular graphs on exactly n vertices with pairwise distinct tau."""
    if k < 3:
        raise Infeasible("k must be at least 3")
    if (k * n) % 2:
        raise Infeasible(f"parity: k*n = {k * n} is odd")
    groups = _groups(k, _max_base_for(k, n))
    fits = {key: mem for key, mem in groups.items() if assembled_size(k, *key) <= n}
    if not fits:
        raise Infeasible(f"n={n} too small for k={k}")
    key = min(fits, key=lambda kk: (-len(fits[kk]), kk[0], kk[1]))
    m, deg2 = key
    extra = n - assembled_size(k, m, deg2)
    if extra and (k * (k + 1 + extra)) % 2:
        raise Infeasible(f"no {k}-regular seed on {k + 1 + extra} vertices for padding")
    chosen = fits[key][:max_members] if max_members else fits[key]
    log.info("k=%d n=%d: group m=%d deg2=%d with %d bases, extra=%d", k, n, m, deg2, len(chosen), extra)

    members, taus, words, base_taus = [], [], [], []
    for b in chosen:
        w = build_base(k, b)
        g = attach_pendants(k, w.graph, extra)
        if g.n != n or degree_profile(g) != {k: n} or not g.is_connected():
            raise AssertionError(f"assembly of {format_word(b.word)} is not {k}-regular on {n} vertices")
        members.append(g)
        taus.append(tau(g))
        words.append(format_word(b.word))
        base_taus.append(b.tau)
    if len(set(taus)) != len(taus):
        raise AssertionError("tau values within the family are not distinct")
    blocks = {"H": tau(attachment_block(PendantSpec(k, "H")))}
    if k >= 5:
        blocks["Hprime"] = tau(attachment_block(PendantSpec(k, "Hprime")))
    if extra:
        blocks["Hdoubleprime"] = tau(attachment_block(PendantSpec(k, "Hdoubleprime", extra)))
    return RegularFamily(k, n, members, taus, words, base_taus, key, extra, blocks)


def predicted_tau(family: RegularFamily, index: int) -> int:
    """tau(base) times the block factors, the cut-vertex factorization of a member."""
    k, (m, deg2) = family.k, family.group
    h_count = deg2 - (1 if family.extra else 0)
    value = family.base_taus[index] * family.block_taus["H"] ** h_count
    if family.extra:
        value *= family.block_taus["Hdoubleprime"]
    if k >= 5:
        value *= family.block_taus["Hprime"] ** (m - deg2)
    return value


def enumerate_pendant_specs(ks=range(3, 9), extras=range(0, 5)) -> Iterator[PendantSpec]:
    for k, variant, extra in product(ks, VARIANTS, extras):
        if variant != "Hdoubleprime" and extra:
            continue
        yield PendantSpec(k, variant, extra)
