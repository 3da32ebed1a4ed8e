"""
Witness graphs and the surgeries that act on their witness edge.

A witness is a simple connected graph G with a distinguished edge e. Its
vector is (tau(G/e), tau(G-e)). Each letter adds one vertex and moves the
vector by a fixed matrix:

    A  Subdivide     subdivide e; witness moves to a half of e
    B  TriangleKeep  new vertex joined to both ends of e; witness stays
    C  TriangleMove  same triangle; witness moves to a new triangle edge

Words are written leftmost-matrix-first, so `build("A C")` performs the C
surgery first and then A, and its vector is A·C·(1, 0).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from . import algebra
from .algebra import FeasVec, Mat2
from .errors import DegreeTooHigh, MalformedWord
from .graph import MultiGraph, contract, delete, tau, tau_brute


class OpLetter(Enum):
    Subdivide = "A"
    TriangleKeep = "B"
    TriangleMove = "C"

    @property
    def matrix(self) -> Mat2:
        return algebra.NAMED[self.value]

    def __str__(self):
        return self.value


OpWord = tuple[OpLetter, ...]

_TOKEN = re.compile(r"([ABC])(\d*)")


def parse_word(text: str) -> OpWord:
    """Parse `A A C B C`, `A2 C B C` or compact `A2CBC`; `A3` expands to `A A A`."""
    compact = "".join(text.replace(",", " ").split())
    letters: list[OpLetter] = []
    pos = 0
    while pos < len(compact):
        m = _TOKEN.match(compact, pos)
        if m is None:
            raise MalformedWord(f"bad character {compact[pos]!r} in word {text!r}")
        count = int(m.group(2)) if m.group(2) else 1
        letters.extend([OpLetter(m.group(1))] * count)
        pos = m.end()
    return tuple(letters)


def as_word(word) -> OpWord:
    if isinstance(word, str):
        return parse_word(word)
    return tuple(w if isinstance(w, OpLetter) else OpLetter(w) for w in word)


def format_word(word: Iterable[OpLetter]) -> str:
    return " ".join(str(x) for x in word)


def weight(word) -> int:
    return len(as_word(word))


@dataclass(frozen=True)
class WitnessGraph:
    graph: MultiGraph
    witness: int

    def __post_init__(self):
        g = self.graph
        if not (0 <= self.witness < g.m):
            raise ValueError(f"witness index {self.witness} out of range")
        if not g.is_simple():
            raise ValueError("witness graph must be simple")
        if not g.is_connected():
            raise ValueError("witness graph must be connected")
        if g.n >= 3 and g.m > 3 * g.n - 6:
            raise ValueError(f"{g.m} edges on {g.n} vertices cannot be planar")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def witness_edge(self) -> tuple[int, int]:
        return self.graph.edges[self.witness]


def initial_witness() -> WitnessGraph:
    return WitnessGraph(MultiGraph(2, ((0, 1),)), 0)


def apply_op(w: WitnessGraph, letter) -> WitnessGraph:
    """Perform one surgery on the witness edge; exactly one vertex is added."""
    letter = letter if isinstance(letter, OpLetter) else OpLetter(letter)
    g = w.graph
    x, y = g.edges[w.witness]
    z = g.n
    if letter is OpLetter.Subdivide:
        # edge e becomes x-z in place (the new witness), y-z is appended
        edges = list(g.edges)
        edges[w.witness] = (x, z)
        edges.append((y, z))
        return WitnessGraph(MultiGraph(z + 1, tuple(edges)), w.witness)
    existing = set(g.edges)
    if (x, z) in existing or (y, z) in existing:
        raise ValueError("triangle surgery would create a parallel edge")
    new = MultiGraph(z + 1, g.edges + ((x, z), (y, z)))
    if letter is OpLetter.TriangleKeep:
        return WitnessGraph(new, w.witness)
    return WitnessGraph(new, g.m)


def build(word) -> WitnessGraph:
    w = initial_witness()
    for letter in reversed(as_word(word)):
        w = apply_op(w, letter)
    return w


def vector_of(w: WitnessGraph, counter=tau) -> FeasVec:
    return FeasVec(counter(contract(w.graph, w.witness)), counter(delete(w.graph, w.witness)))


def vector_of_brute(w: WitnessGraph) -> FeasVec:
    return vector_of(w, counter=tau_brute)


def word_matrix(word) -> Mat2:
    return algebra.mat_prod(letter.matrix for letter in as_word(word))


def predicted_vector(word) -> FeasVec:
    """Vector implied by the word's matrices alone; no graph is built."""
    return algebra.mat_apply(word_matrix(word), algebra.UNIT)


def glue_path(w: WitnessGraph, i: int) -> WitnessGraph:
    """Close a cycle of length i+2 through the witness edge using i new vertices.

    The new witness is the path edge between the first two new vertices, so
    both of its endpoints have degree 2. No degree precondition is checked.
    """
    if i < 2:
        raise ValueError("cycle glue needs i >= 2 new vertices")
    g = w.graph
    x, y = g.edges[w.witness]
    first = g.n
    path = [x] + list(range(first, first + i)) + [y]
    new_edges = tuple(zip(path, path[1:]))
    return WitnessGraph(MultiGraph(g.n + i, g.edges + new_edges), g.m + 1)


def cycle_glue(w: WitnessGraph, i: int) -> WitnessGraph:
    """Glue a C_{i+2} onto the witness edge keeping the maximum degree at most 3.

    The vector moves by A^(i-1)·C. Raises DegreeTooHigh unless both endpoints
    of the witness edge have degree at most 2.
    """
    x, y = w.witness_edge
    deg = w.graph.degrees()
    if deg[x] > 2 or deg[y] > 2:
        raise DegreeTooHigh(f"witness endpoints have degrees {deg[x]}, {deg[y]}")
    return glue_path(w, i)


def cycle_glue_word(i: int) -> OpWord:
    return (OpLetter.Subdivide,) * (i - 1) + (OpLetter.TriangleMove,)


def words_up_to(max_weight: int, alphabet: Sequence[OpLetter] = tuple(OpLetter)):
    """Yield every word of weight <= max_weight over the alphabet, shortest first."""
    layer: list[OpWord] = [()]
    for _ in range(max_weight + 1):
        yield from layer
        layer = [wd + (c,) for wd in layer for c in alphabet]
