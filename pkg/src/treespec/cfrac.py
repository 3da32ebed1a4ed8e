"""
Continued fractions [a1, ..., al] = 1/(a1 + 1/(... + 1/al)) and their
correspondence with words in A and D.

For t/u = [a1, b1, ..., al, bl],

    (u, t) = A^a1 D^b1 ... A^al D^bl (1, 0)

so the denominator is the FIRST coordinate of the matrix image. Keep that
orientation in mind when moving between this module and the vectors of the
witness calculus, where the first coordinate is a contraction count.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .algebra import A, D, I, mat_mul, mat_pow
from .errors import MalformedWord, NonInvertibleDenominator, TooLarge

CFrac = tuple[int, ...]
AdWord = tuple[tuple[str, int], ...]

ZAREMBA_MAX_LOG = 44


def as_cfrac(quotients: Sequence[int]) -> CFrac:
    cf = tuple(int(a) for a in quotients)
    if any(a < 1 for a in cf):
        raise ValueError(f"partial quotients must be positive: {cf}")
    return cf


def parse_cfrac(text: str) -> CFrac:
    text = text.strip().strip("[]")
    if not text:
        return ()
    return as_cfrac(int(x) for x in re.split(r"[,\s]+", text) if x)


def cf_eval(cf: Sequence[int]) -> tuple[int, int]:
    """Exact value of the continued fraction as a reduced pair (t, u) = numerator, denominator."""
    cf = as_cfrac(cf)
    # (u, t) = prod [[a, 1], [1, 0]] (1, 0); fold from the right
    u, t = 1, 0
    for a in reversed(cf):
        u, t = a * u + t, u
    return t, u


def cf_value(cf: Sequence[int]) -> Fraction:
    """Nested-fraction evaluation with Fractions, independent of the matrix fold."""
    value = Fraction(0)
    for a in reversed(as_cfrac(cf)):
        value = 1 / (a + value)
    return value


def cf_eval_mod(cf: Sequence[int], n: int) -> int:
    """Evaluate over the rationals first, then reduce t * u^-1 modulo n."""
    t, u = cf_eval(cf)
    try:
        inv = pow(u, -1, n)
    except ValueError:
        raise NonInvertibleDenominator(f"denominator {u} is not invertible mod {n}") from None
    return (t * inv) % n


def parse_ad_word(text: str) -> AdWord:
    """Parse `A2 D A D` or `AADAD` into run-length pairs."""
    compact = "".join(text.split())
    if not re.fullmatch(r"([AD]\d*)*", compact):
        raise MalformedWord(f"bad A/D word {text!r}")
    runs: list[list] = []
    for letter, count in re.findall(r"([AD])(\d*)", compact):
        k = int(count) if count else 1
        if k < 1:
            raise MalformedWord(f"zero exponent in {text!r}")
        if runs and runs[-1][0] == letter:
            runs[-1][1] += k
        else:
            runs.append([letter, k])
    return tuple((letter, k) for letter, k in runs)


def format_ad_word(word: AdWord) -> str:
    return " ".join(letter if k == 1 else f"{letter}{k}" for letter, k in word)


def ad_word_vector(word: AdWord) -> tuple[int, int]:
    """(u, t) = product of the word's A and D powers applied to (1, 0)."""
    m = I
    for letter, k in word:
        m = mat_mul(m, mat_pow(A if letter == "A" else D, k))
    return m.a11, m.a21


def cf_from_word(word: AdWord) -> CFrac:
    """A^a1 D^b1 ... A^al D^bl  ->  [a1, b1, ..., al, bl]."""
    if len(word) % 2:
        raise MalformedWord("word must consist of A^a D^b pairs")
    quotients = []
    for idx, (letter, k) in enumerate(word):
        expected = "A" if idx % 2 == 0 else "D"
        if letter != expected or k < 1:
            raise MalformedWord(f"expected {expected}^k with k >= 1 at position {idx}, got {letter}^{k}")
        quotients.append(k)
    return tuple(quotients)


def word_from_cf(cf: Sequence[int]) -> AdWord:
    cf = as_cfrac(cf)
    if len(cf) % 2:
        raise MalformedWord("only even-length fractions correspond to A/D pair words")
    return tuple(("A" if idx % 2 == 0 else "D", a) for idx, a in enumerate(cf))


@dataclass(frozen=True)
class ZarembaCertificate:
    u: int
    t: int
    cf: CFrac

    def to_json_obj(self) -> dict:
        return {"u": str(self.u), "t": str(self.t), "cf": list(self.cf)}


def zaremba_pattern_ok(cf: Sequence[int]) -> bool:
    """[a1, 1, a2, 1, ..., al, 1] with every a_i in {1, 2}."""
    return len(cf) % 2 == 0 and all(
        (q in (1, 2)) if idx % 2 == 0 else q == 1 for idx, q in enumerate(cf))


def zaremba_weak(n: int) -> list[ZarembaCertificate]:
    """Denominators u < n with a coprime t < u and t/u = [a1, 1, ..., al, 1], a_i in {1, 2}.

    The candidates are A D A^a2 D ... A^al D (1, 0) for l <= floor(log2(n)/2).
    If their first coordinates take at least sqrt(#candidates) values, one
    certificate per distinct u is returned; otherwise the largest class with a
    common numerator is multiplied by A, which makes the sums the new
    denominators. Ties keep the lexicographically smallest fraction.
    """
    if n < 4:
        raise ValueError("n must be at least 4")
    half_log = (n.bit_length() - 1) // 2
    if 2 * half_log > ZAREMBA_MAX_LOG:
        raise TooLarge(f"zaremba_weak limited to log2(n) <= {ZAREMBA_MAX_LOG}")
    candidates: list[tuple[CFrac, int, int]] = []
    for length in range(1, half_log + 1):
        for tail in product((1, 2), repeat=length - 1):
            cf = (1, 1) + tuple(q for a in tail for q in (a, 1))
            t, u = cf_eval(cf)
            candidates.append((cf, u, t))
    denominators = {u for _, u, _ in candidates}
    if len(denominators) ** 2 >= len(candidates):
        chosen = candidates
    else:
        by_t: dict[int, list] = {}
        for cf, u, t in candidates:
            by_t.setdefault(t, []).append((cf, u, t))
        group = max(by_t.values(), key=len)
        # A (u, t) = (u + t, t) prefixes one more A: the leading quotient becomes 2
        chosen = [((2,) + cf[1:], u + t, t) for cf, u, t in group]
    best: dict[int, ZarembaCertificate] = {}
    for cf, u, t in sorted(chosen):
        if u >= n or u in best:
            continue
        best[u] = ZarembaCertificate(u=u, t=t, cf=cf)
    return [best[u] for u in sorted(best)]


def zaremba_floor(n: int) -> int:
    """ceil(n^(1/4) / 2) - 1, the guaranteed number of distinct denominators."""
    root = math.isqrt(math.isqrt(n))
    # exact ceil of n^(1/4)/2 using the integer fourth root
    if root ** 4 == n:
        return -(-root // 2) - 1
    return (root + 2) // 2 - 1 if root % 2 == 0 else (root + 1) // 2 - 1
