"""
Short words in SL2(Z_N) over X = AD (= C) and Y = A^2 D (= AC).

A word w = g1 g2 ... gL evaluates to P = g1 g2 ... gL and only its first
column P (1, 0) matters: it is the witness vector of the graph obtained by
performing the surgeries of w. X costs one vertex, Y costs two.

Searches are bidirectional breadth-first: forward from the identity by
right multiplication, backward from the whole coset of matrices with the
requested first column.
"""

from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from . import algebra
from .algebra import FeasVec, Mat2, ext_gcd
from .cfrac import CFrac
from .errors import BadColumn, NotCoprime, NotFound, TooLarge
from .graph import tau
from .witness import OpLetter, OpWord, WitnessGraph, build, format_word, predicted_vector, vector_of

log = logging.getLogger(__name__)

PROBE_MAX_N = 64

GEN = {"X": algebra.C, "Y": algebra.mat_mul(algebra.A, algebra.C)}
GEN_INV = {"X": Mat2(1, -1, -1, 2), "Y": Mat2(1, -2, -1, 3)}
LETTERS = ("X", "Y")
GRAPH_COST = {"X": 1, "Y": 2}

GenWord = str


class Sl2ModN(NamedTuple):
    N: int
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def make(cls, n: int, a: int, b: int, c: int, d: int) -> "Sl2ModN":
        m = cls(n, a % n, b % n, c % n, d % n)
        if (m.a * m.d - m.b * m.c) % n != 1 % n:
            raise ValueError(f"determinant of {m} is not 1 mod {n}")
        return m

    @property
    def first_column(self) -> tuple[int, int]:
        return self.a, self.c


def _key(a, b, c, d, n):
    return a + n * (b + n * (c + n * d))


def _unkey(k, n):
    a, k = k % n, k // n
    b, k = k % n, k // n
    c, d = k % n, k // n
    return a, b, c, d


def _mul(k, g: Mat2, n):
    a, b, c, d = _unkey(k, n)
    return _key((a * g.a11 + b * g.a21) % n, (a * g.a12 + b * g.a22) % n,
                (c * g.a11 + d * g.a21) % n, (c * g.a12 + d * g.a22) % n, n)


def sl2_from_pair(a: int, b: int, n: int) -> Sl2ModN:
    """Complete (a, b) to an SL2(Z_N) matrix [[a, -y], [b, x]] where a*x + b*y = 1."""
    g, x, y = ext_gcd(a, b)
    if g != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {g}")
    return Sl2ModN.make(n, a, -y, b, x)


def eval_word(word: GenWord) -> Mat2:
    return algebra.mat_prod(GEN[ch] for ch in word)


def word_vector(word: GenWord) -> FeasVec:
    """Exact integer image of (1, 0) under the word's product."""
    return algebra.mat_apply(eval_word(word), algebra.UNIT)


def graph_cost(word: GenWord) -> int:
    return sum(GRAPH_COST[ch] for ch in word)


def default_max_len(n: int) -> int:
    return int(12 * math.log2(n)) + 16


def _column_ok(a: int, b: int, n: int) -> bool:
    return math.gcd(math.gcd(a, b), n) == 1


def find_word(target, n: int, max_len: int | None = None) -> GenWord:
    """Shortest word over {X, Y} whose product maps (1, 0) to target mod n.

    Both directions are expanded one full layer at a time (always the side
    with the smaller frontier), so the first meeting gives an optimal word.
    """
    if n < 2:
        raise ValueError("modulus must be at least 2")
    a, b = (int(target[0]) % n, int(target[1]) % n)
    if not _column_ok(a, b, n):
        raise BadColumn(f"column ({a}, {b}) has a common factor with {n}")
    if max_len is None:
        max_len = default_max_len(n)

    # the target coset M * [[1, s], [0, 1]] for a fixed completion M
    base = _completion(a, b, n)
    coset = {}
    for s in range(n):
        k = _key(base[0], (base[0] * s + base[1]) % n, base[2], (base[2] * s + base[3]) % n, n)
        coset[k] = None

    start = _key(1, 0, 0, 1, n)
    fwd = {start: None}
    bwd = dict(coset)
    if start in bwd:
        return ""
    fwd_front, bwd_front = [start], list(coset)
    depth_f = depth_b = 0
    while depth_f + depth_b < max_len and fwd_front and bwd_front:
        meets = []
        if len(fwd_front) <= len(bwd_front):
            nxt = []
            for k in fwd_front:
                for ch in LETTERS:
                    j = _mul(k, GEN[ch], n)
                    if j in fwd:
                        continue
                    fwd[j] = (k, ch)
                    nxt.append(j)
                    if j in bwd:
                        meets.append(j)
            fwd_front = nxt
            depth_f += 1
        else:
            nxt = []
            for k in bwd_front:
                for ch in LETTERS:
                    j = _mul(k, GEN_INV[ch], n)
                    if j in bwd:
                        continue
                    bwd[j] = (k, ch)
                    nxt.append(j)
                    if j in fwd:
                        meets.append(j)
            bwd_front = nxt
            depth_b += 1
        if meets:
            return _splice(min(meets), fwd, bwd)
    raise NotFound(f"no word of length <= {max_len} reaches column ({a}, {b}) mod {n}")


def _completion(a: int, b: int, n: int) -> tuple[int, int, int, int]:
    """Some SL2(Z_n) matrix with first column (a, b), given gcd(a, b, n) = 1."""
    # lift a by multiples of n until it is coprime to the lift of b; some k < n works
    b_lift = b if b else n
    for k in range(n * n + 1):
        a_lift = a + k * n
        g, x, y = ext_gcd(a_lift, b_lift)
        if g == 1:
            return a % n, (-y) % n, b % n, x % n
    raise BadColumn(f"could not complete column ({a}, {b}) mod {n}")


def _splice(mid, fwd, bwd) -> GenWord:
    left = []
    k = mid
    while fwd[k] is not None:
        k, ch = fwd[k]
        left.append(ch)
    right = []
    k = mid
    while bwd[k] is not None:
        k, ch = bwd[k]
        right.append(ch)
    return "".join(reversed(left)) + "".join(right)


def find_word_bfs(target, n: int, max_len: int | None = None) -> GenWord:
    """Plain forward BFS; the reference for the bidirectional search."""
    a, b = int(target[0]) % n, int(target[1]) % n
    if not _column_ok(a, b, n):
        raise BadColumn(f"column ({a}, {b}) has a common factor with {n}")
    if max_len is None:
        max_len = default_max_len(n)
    start = _key(1, 0, 0, 1, n)
    parent = {start: None}
    queue = deque([(start, 0)])
    while queue:
        k, dist = queue.popleft()
        ka, _, kc, _ = _unkey(k, n)
        if (ka, kc) == (a, b):
            word = []
            while parent[k] is not None:
                k, ch = parent[k]
                word.append(ch)
            return "".join(reversed(word))
        if dist == max_len:
            continue
        for ch in LETTERS:
            j = _mul(k, GEN[ch], n)
            if j not in parent:
                parent[j] = (k, ch)
                queue.append((j, dist + 1))
    raise NotFound(f"no word of length <= {max_len} reaches column ({a}, {b}) mod {n}")


def find_word_retry(target, n: int) -> GenWord:
    """find_word with the default cap, retried once with the cap doubled."""
    cap = default_max_len(n)
    try:
        return find_word(target, n, cap)
    except NotFound:
        log.info("retrying N=%d target=%s with cap %d", n, target, 2 * cap)
        return find_word(target, n, 2 * cap)


def word_to_opword(word: GenWord) -> OpWord:
    out: list[OpLetter] = []
    for ch in word:
        if ch == "X":
            out.append(OpLetter.TriangleMove)
        elif ch == "Y":
            out.extend((OpLetter.Subdivide, OpLetter.TriangleMove))
        else:
            raise ValueError(f"unknown generator {ch!r}")
    return tuple(out)


@dataclass(frozen=True)
class ModWitnessCertificate:
    N: int
    u: int
    word: GenWord
    graph: WitnessGraph
    vector: FeasVec

    @property
    def tau(self) -> int:
        return self.vector.t + self.vector.u

    @property
    def vertices(self) -> int:
        return self.graph.n

    def to_json_obj(self) -> dict:
        return {
            "N": self.N,
            "u": self.u,
            "word": self.word,
            "opword": format_word(word_to_opword(self.word)),
            "t": str(self.vector.t),
            "u_vec": str(self.vector.u),
            "tau": str(self.tau),
            "vertices": self.vertices,
        }


def feasible_mod(a: int, b: int, n: int) -> ModWitnessCertificate:
    """A planar witness whose vector is congruent to (a, b) mod n."""
    if math.gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    word = find_word_retry((a, b), n)
    opword = word_to_opword(word)
    witness = build(opword)
    vec = vector_of(witness)
    if vec != predicted_vector(opword):
        raise AssertionError(f"graph vector {vec} disagrees with matrix prediction for {word}")
    if (vec.t - a) % n or (vec.u - b) % n:
        raise AssertionError(f"vector {vec} is not congruent to ({a}, {b}) mod {n}")
    return ModWitnessCertificate(N=n, u=a % n, word=word, graph=witness, vector=vec)


def tau_mod_witness(u: int, n: int) -> ModWitnessCertificate:
    """A planar graph on O(log n) vertices whose spanning-tree count is u mod n."""
    if n < 2:
        raise ValueError("modulus must be at least 2")
    if not 0 <= u < n:
        raise ValueError(f"residue {u} out of range for modulus {n}")
    cert = feasible_mod(1, (u - 1) % n, n)
    cert = ModWitnessCertificate(N=n, u=u, word=cert.word, graph=cert.graph, vector=cert.vector)
    if tau(cert.graph.graph) % n != u:
        raise AssertionError(f"tau of certificate graph is not {u} mod {n}")
    return cert


def zaremba_mod(u: int, n: int) -> CFrac:
    """Partial quotients [a1, 1, ..., al, 1], a_i in {1, 2}, whose value is u mod n.

    The word's letters X = A D and Y = A^2 D spell the quotients directly; the
    target column (1, u) makes the denominator 1 and the numerator u mod n.
    """
    if n < 2:
        raise ValueError("modulus must be at least 2")
    word = find_word_retry((1, u % n), n)
    cf: list[int] = []
    for ch in word:
        cf.extend((1 if ch == "X" else 2, 1))
    return tuple(cf)


def diameter_probe(n: int) -> tuple[int, int]:
    """BFS layers from the identity under right multiplication by X and Y.

    Returns (eccentricity of the identity, number of elements reached).
    """
    if n < 2:
        raise ValueError("modulus must be at least 2")
    if n > PROBE_MAX_N:
        raise TooLarge(f"diameter_probe limited to N <= {PROBE_MAX_N}")
    start = _key(1, 0, 0, 1, n)
    seen = {start}
    frontier = [start]
    depth = 0
    while True:
        nxt = []
        for k in frontier:
            for ch in LETTERS:
                j = _mul(k, GEN[ch], n)
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        if not nxt:
            return depth, len(seen)
        frontier = nxt
        depth += 1


def sl2_order(n: int) -> int:
    """|SL2(Z_n)| = n^3 prod_{p | n} (1 - 1/p^2)."""
    order = n ** 3
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            order = order // (p * p) * (p * p - 1)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        order = order // (m * m) * (m * m - 1)
    return order


def fit_log2(points) -> tuple[float, float]:
    """Least-squares (slope, intercept) of y against log2(N)."""
    from statistics import linear_regression

    xs = [math.log2(n) for n, _ in points]
    ys = [float(y) for _, y in points]
    slope, intercept = linear_regression(xs, ys)
    return slope, intercept
