"""
Enumeration and decoding of the two planar-feasible word families.

Simple words are A^a1 C A^a2 C ... A^at C with every a_i >= 0 and weight
sum(a_i) + t. Full words are sequences of blocks A^a C (a >= 0) or B^a C
(a >= 1), a block weighing a + 1. Both families include the empty word,
whose vector is (1, 0).
"""

from __future__ import annotations

from collections import Counter
from enum import Enum
from typing import Iterator, NamedTuple

from . import algebra
from .algebra import A, B, C, FeasVec, I, Mat2, mat_mul, mat_pow
from .errors import EmptyInput, NotDecodable, TooLarge
from .witness import OpLetter, OpWord

SIMPLE_MAX_N = 22
FULL_MAX_N = 18

SimpleWord = tuple[int, ...]


class Block(NamedTuple):
    family: str  # "A" or "B"
    a: int

    @property
    def weight(self) -> int:
        return self.a + 1

    @property
    def matrix(self) -> Mat2:
        return mat_mul(mat_pow(algebra.NAMED[self.family], self.a), C)


FullWord = tuple[Block, ...]


class Branch(Enum):
    DistinctSeconds = "DistinctSeconds"
    DistinctSums = "DistinctSums"


def simple_weight(word: SimpleWord) -> int:
    return sum(word) + len(word)


def full_weight(word: FullWord) -> int:
    return sum(b.weight for b in word)


def simple_to_opword(word: SimpleWord) -> OpWord:
    out: list[OpLetter] = []
    for a in word:
        out.extend([OpLetter.Subdivide] * a)
        out.append(OpLetter.TriangleMove)
    return tuple(out)


def full_to_opword(word: FullWord) -> OpWord:
    out: list[OpLetter] = []
    for blk in word:
        letter = OpLetter.Subdivide if blk.family == "A" else OpLetter.TriangleKeep
        out.extend([letter] * blk.a)
        out.append(OpLetter.TriangleMove)
    return tuple(out)


def simple_vector(word: SimpleWord) -> FeasVec:
    m = I
    for a in word:
        m = mat_mul(m, mat_mul(mat_pow(A, a), C))
    return FeasVec(m.a11, m.a21)


def full_vector(word: FullWord) -> FeasVec:
    m = I
    for blk in word:
        m = mat_mul(m, blk.matrix)
    return FeasVec(m.a11, m.a21)


def _blocks_of_weight(w: int) -> list[tuple[Block, Mat2]]:
    blocks = [Block("A", w - 1)]
    if w >= 2:
        blocks.append(Block("B", w - 1))
    return [(b, b.matrix) for b in blocks]


def iter_simple(n: int) -> Iterator[tuple[SimpleWord, FeasVec]]:
    """Stream (word, vector) for every simple word of weight <= n.

    Order is lexicographic by (t, a1, ..., at). Prefix products are shared
    along the depth-first walk so each word costs O(1) matrix products.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > SIMPLE_MAX_N:
        raise TooLarge(f"enum_simple limited to n <= {SIMPLE_MAX_N}")
    step = [mat_mul(mat_pow(A, a), C) for a in range(n + 1)]

    def walk(prefix: Mat2, exps: list[int], left: int, budget: int):
        if left == 0:
            yield tuple(exps), FeasVec(prefix.a11, prefix.a21)
            return
        # room for the remaining left-1 blocks of weight >= 1 each
        for a in range(budget - left + 1):
            exps.append(a)
            yield from walk(mat_mul(prefix, step[a]), exps, left - 1, budget - a - 1)
            exps.pop()

    for t in range(n + 1):
        yield from walk(I, [], t, n)


def enum_simple(n: int) -> list[tuple[SimpleWord, FeasVec]]:
    return list(iter_simple(n))


def iter_full(n: int) -> Iterator[tuple[FullWord, FeasVec]]:
    """Stream every block word of total weight <= n, ordered by (t, blocks)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > FULL_MAX_N:
        raise TooLarge(f"enum_full limited to n <= {FULL_MAX_N}")
    choices = sorted((blk for w in range(1, n + 1) for blk in _blocks_of_weight(w)),
                     key=lambda bm: (bm[0].family, bm[0].a))

    def walk(prefix: Mat2, blocks: list[Block], left: int, budget: int):
        if left == 0:
            yield tuple(blocks), FeasVec(prefix.a11, prefix.a21)
            return
        for blk, mat in choices:
            if blk.weight > budget - (left - 1):
                continue
            blocks.append(blk)
            yield from walk(mat_mul(prefix, mat), blocks, left - 1, budget - blk.weight)
            blocks.pop()

    for t in range(n + 1):
        yield from walk(I, [], t, n)


def enum_full(n: int) -> list[tuple[FullWord, FeasVec]]:
    return list(iter_full(n))


def all_distinct(vectors) -> bool:
    """Pairwise distinctness by sorting and comparing neighbours."""
    ordered = sorted(vectors)
    return all(p != q for p, q in zip(ordered, ordered[1:]))


def decode_simple(v) -> SimpleWord:
    """Recover (a1, ..., at) from A^a1 C ... A^at C (1, 0) by peeling A then D."""
    t, u = v
    if t < 0 or u < 0:
        raise NotDecodable(f"{tuple(v)} has a negative coordinate")
    exps = []
    while (t, u) != (1, 0):
        if u == 0 or t <= u:
            raise NotDecodable(f"{tuple(v)}: stuck at ({t}, {u})")
        strips = (t - 1) // u  # largest k with t - k*u > 0
        t -= strips * u
        # t now in (0, u]; undo D, which left the second coordinate >= the first
        u -= t
        if u < 0:
            raise NotDecodable(f"{tuple(v)}: left the positive quadrant")
        if (t, u) != (1, 0) and t <= u:
            raise NotDecodable(f"{tuple(v)}: ({t}, {u}) is not the image of A")
        exps.append(strips - 1)
    return tuple(exps)


def _undo_c(p: int, q: int) -> tuple[int, int]:
    # C^-1 = [[1, -1], [-1, 2]]
    return p - q, 2 * q - p


def decode_full(v) -> FullWord:
    """Recover the blocks of M1 ... Mt (1, 0) from the ratio of the coordinates.

    An A^a C block puts u/v in (1+a, 2+a]; a B^a C block puts it in
    (2/(a+2), 2/(a+1)]. Each block is inverted exactly and must leave an
    integral vector with x > 0, y >= 0.
    """
    x, y = v
    blocks: list[Block] = []
    while (x, y) != (1, 0):
        if x <= 0 or y <= 0:
            raise NotDecodable(f"{tuple(v)}: ({x}, {y}) lies outside every ratio interval")
        if x > y:
            a = -(-x // y) - 2
            p, q = x - a * y, y
            blk = Block("A", a)
        else:
            a = (2 * y) // x - 1
            p, q = x, y
            for _ in range(a):
                # B^-1 (p, q) = (p/2, (q - p/2)/2)
                if p % 2:
                    raise NotDecodable(f"{tuple(v)}: non-integral inverse of B")
                half = p // 2
                if (q - half) % 2:
                    raise NotDecodable(f"{tuple(v)}: non-integral inverse of B")
                p, q = half, (q - half) // 2
            blk = Block("B", a)
        x, y = _undo_c(p, q)
        if x <= 0 or y < 0:
            raise NotDecodable(f"{tuple(v)}: inverting {blk} gave ({x}, {y})")
        blocks.append(blk)
    return tuple(blocks)


def extract_tau_set(vs) -> tuple[set[int], Branch]:
    """Turn N distinct vectors into at least sqrt(N) distinct spanning-tree counts.

    Either the second coordinates (counts of G-e) already take sqrt(N) values,
    or some second coordinate repeats sqrt(N) times and those vectors have
    distinct sums (counts of G).
    """
    vs = [tuple(v) for v in vs]
    if not vs:
        raise EmptyInput("need at least one vector")
    total = len(vs)
    seconds = {u for _, u in vs}
    if len(seconds) ** 2 >= total:
        return seconds, Branch.DistinctSeconds
    common, _ = Counter(u for _, u in vs).most_common(1)[0]
    sums = {t + u for t, u in vs if u == common}
    return sums, Branch.DistinctSums


def spectrum_lower_bound(n: int) -> set[int]:
    """Spanning-tree counts of planar graphs on at most n vertices: {t+u} and {u}."""
    if n < 2:
        raise ValueError("n must be at least 2")
    values: set[int] = set()
    for _, (t, u) in iter_simple(n - 2):
        values.add(t + u)
        values.add(u)
    return values


def guaranteed_bound(n: int) -> float:
    return 2 ** (n / 2 - 1)


def format_simple(word: SimpleWord) -> str:
    parts = []
    for a in word:
        if a:
            parts.append(f"A{a}" if a > 1 else "A")
        parts.append("C")
    return " ".join(parts)


def format_full(word: FullWord) -> str:
    parts = []
    for blk in word:
        if blk.a:
            parts.append(f"{blk.family}{blk.a}" if blk.a > 1 else blk.family)
        parts.append("C")
    return " ".join(parts)


def certificate(word_text: str, vec: FeasVec, weight: int) -> dict:
    return {"word": word_text, "t": str(vec.t), "u": str(vec.u),
            "tau": str(vec.t + vec.u), "vertices": weight + 2}

