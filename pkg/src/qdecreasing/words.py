"""Membership, enumeration, counting and run decomposition of q-decreasing words.

Words are plain ``str`` objects over ``"01"``; position 1 is the leftmost
character.  A word is q-decreasing when every maximal factor ``0^a 1^b``
has ``a == 0`` or ``q*a > b`` (the "plus" variant relaxes this to ``>=``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .qparam import QParam, RationalQ, parse_q

Word = str


def check_word(w: Word) -> Word:
    if not isinstance(w, str) or any(ch not in "01" for ch in w):
        raise ValueError(f"not a binary word: {w!r}")
    return w


def runs(w: Word) -> Iterator[tuple[str, int]]:
    """Maximal runs of ``w`` as (symbol, length) pairs."""
    for sym, grp in itertools.groupby(w):
        yield sym, sum(1 for _ in grp)


def zero_one_factors(w: Word) -> Iterator[tuple[int, int]]:
    """Pairs (a, b) for every maximal factor ``0^a 1^b`` with a, b >= 1."""
    rs = list(runs(w))
    for (s0, a), (s1, b) in zip(rs, rs[1:]):
        if s0 == "0" and s1 == "1":
            yield a, b


@dataclass(frozen=True)
class PrimeDecomposition:
    """``w = 1^m 0^{a1} 1^{b1} ... 0^{ak} 1^{bk} 0^ell``."""

    m: int
    factors: tuple[tuple[int, int], ...]
    ell: int

    @property
    def length(self) -> int:
        return self.m + self.ell + sum(a + b for a, b in self.factors)

    def word(self) -> Word:
        body = "".join("0" * a + "1" * b for a, b in self.factors)
        return "1" * self.m + body + "0" * self.ell

    def block_spans(self) -> list[tuple[int, int]]:
        """Start/stop string indices of each prime block, left to right."""
        spans, pos = [], self.m
        for a, b in self.factors:
            spans.append((pos, pos + a + b))
            pos += a + b
        return spans


def decompose(w: Word) -> PrimeDecomposition:
    check_word(w)
    rs = list(runs(w))
    m = ell = 0
    if rs and rs[0][0] == "1":
        m = rs.pop(0)[1]
    if rs and rs[-1][0] == "0":
        ell = rs.pop()[1]
    factors = tuple((rs[i][1], rs[i + 1][1]) for i in range(0, len(rs), 2))
    return PrimeDecomposition(m, factors, ell)


def is_q_decreasing(w: Word, q) -> bool:
    q = parse_q(q)
    return all(q.gt(a, b) for a, b in zero_one_factors(check_word(w)))


def is_q_plus_decreasing(w: Word, q) -> bool:
    q = parse_q(q)
    if not q.is_rational:
        return is_q_decreasing(w, q)
    return all(q.ge(a, b) for a, b in zero_one_factors(check_word(w)))


def all_words(n: int) -> Iterator[Word]:
    """Every binary word of length n in lexicographic order."""
    for bits in itertools.product("01", repeat=n):
        yield "".join(bits)


def enumerate_words(n: int, q, strict: bool = True) -> list[Word]:
    """W_n^q (or W_n^{q+} when ``strict`` is false) in lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    q = parse_q(q)
    out: list[Word] = []

    # Depth-first in 0-before-1 order; prunes as soon as a 1-run is too long.
    def limit(a):
        return q.max_ones(a) if strict else q.max_ones_plus(a)

    def grow(prefix, zeros, ones, leading):
        if len(prefix) == n:
            out.append(prefix)
            return
        if leading:
            grow(prefix + "0", 1, 0, False)
            grow(prefix + "1", 0, 0, True)
            return
        if ones == 0:
            grow(prefix + "0", zeros + 1, 0, False)
        else:
            grow(prefix + "0", 1, 0, False)
        if ones + 1 <= limit(zeros):
            grow(prefix + "1", zeros, ones + 1, False)

    grow("", 0, 0, True)
    return out


def count_words(n: int, q, strict: bool = True) -> int:
    """|W_n^q| by dynamic programming over run states, without listing words.

    States: ``("L",)`` while still in the leading 1s, ``("Z", a)`` inside a
    0-run of length a, ``("O", r)`` inside a 1-run with r more 1s allowed.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    q = parse_q(q)

    def limit(a):
        return q.max_ones(a) if strict else q.max_ones_plus(a)

    states: dict[tuple, int] = {("L",): 1}
    for _ in range(n):
        nxt: dict[tuple, int] = {}

        def add(s, k):
            nxt[s] = nxt.get(s, 0) + k

        for s, k in states.items():
            if s[0] == "L":
                add(("L",), k)
                add(("Z", 1), k)
            elif s[0] == "Z":
                a = s[1]
                add(("Z", a + 1), k)
                room = limit(a)
                if room >= 1:
                    add(("O", room - 1), k)
            else:
                add(("Z", 1), k)
                if s[1] >= 1:
                    add(("O", s[1] - 1), k)
        states = nxt
    return sum(states.values())


def unique_admissible_factor(n: int, q) -> tuple[int, int]:
    """The unique (a, b), a + b = n, with 1 + floor(b/q) <= a <= 1 + floor((b+1)/q)."""
    q = parse_q(q)
    if not isinstance(q, RationalQ) or q.c == 0:
        raise ValueError("unique_admissible_factor needs a rational q > 0")
    threshold = 2 + q.d // q.c
    if n < threshold:
        raise ValueError(f"n must be at least {threshold} for q = {q}")
    b = q.ceil_ratio(n) - 1
    return n - b, b


def admissible_factors_scan(n: int, q: QParam) -> list[tuple[int, int]]:
    """All (a, b) with a + b = n satisfying the factor inequalities, by scanning."""
    out = []
    for b in range(1, n):
        a = n - b
        if 1 + q.floor_div(b) <= a <= 1 + q.floor_div(b + 1):
            out.append((a, b))
    return out
