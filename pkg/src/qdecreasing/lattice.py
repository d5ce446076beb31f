"""The lattice of q-decreasing words under the componentwise order.

Elements are stored both as 0/1 strings and as integer bit masks (leftmost
symbol = most significant bit), so ``v <= w`` is ``v & w == v`` and the
meet is bitwise AND.  Cover edges come from the structural description of
lower covers; a definition-based checker is kept alongside for testing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .qparam import QParam, parse_q
from .words import Word, check_word, count_words, decompose, enumerate_words, is_q_decreasing

DEFAULT_CAP = 200_000


class LatticeTooLarge(ValueError):
    pass


def to_mask(w: Word) -> int:
    return int(w, 2) if w else 0


def from_mask(m: int, n: int) -> Word:
    return format(m, f"0{n}b") if n else ""


def _same_length(v: Word, w: Word):
    check_word(v)
    check_word(w)
    if len(v) != len(w):
        raise ValueError(f"length mismatch: {v!r} vs {w!r}")


def leq(v: Word, w: Word) -> bool:
    _same_length(v, w)
    return all(a <= b for a, b in zip(v, w))


def _require_member(q: QParam, *words: Word):
    for w in words:
        if not is_q_decreasing(w, q):
            raise ValueError(f"{w!r} is not {q}-decreasing")


def meet(v: Word, w: Word, q) -> Word:
    """Greatest lower bound: the bitwise conjunction."""
    q = parse_q(q)
    _same_length(v, w)
    _require_member(q, v, w)
    return "".join("1" if a == b == "1" else "0" for a, b in zip(v, w))


# -- structural lower covers ----------------------------------------------------

def _ones_lower_covers(m: int, q: QParam) -> list[Word]:
    """Words of W_m^q covered by 1^m: one per suffix 0^alpha 1^i, alpha minimal."""
    if m == 0:
        return []
    out = ["1" * (m - 1) + "0"]
    if not q.gt(1, 0):
        return out
    i = 1
    while True:
        alpha = 1 + q.floor_div(i)
        if alpha + i > m:
            return out
        out.append("1" * (m - alpha - i) + "0" * alpha + "1" * i)
        i += 1


def _prime_lower_covers(a: int, b: int, q: QParam) -> list[Word]:
    """Words of W_{a+b}^q covered by the prime word 0^a 1^b."""
    inner = [u for u in _ones_lower_covers(b, q) if u.endswith("0") or u.startswith("1")]
    out = {"0" * a + u for u in inner}
    out.add("0" * (a + 1) + "1" * (b - 1))
    return sorted(out)


def lower_covers(w: Word, q) -> list[Word]:
    """All v with v covered by w in W_n^q, read off the prime decomposition of w.

    Either the leading 1^m drops to one of its lower covers, or exactly one
    prime block 0^a 1^b does; the trailing zeros never change.
    """
    q = parse_q(q)
    dec = decompose(w)
    m = dec.m
    rest = w[m:]
    out = [u + rest for u in _ones_lower_covers(m, q)]
    for (a, b), (lo, hi) in zip(dec.factors, dec.block_spans()):
        for u in _prime_lower_covers(a, b, q):
            out.append(w[:lo] + u + w[hi:])
    return sorted(out)


def covers(v: Word, w: Word, q) -> bool:
    """v is covered by w, decided blockwise against the decomposition of w."""
    q = parse_q(q)
    _same_length(v, w)
    _require_member(q, v, w)
    dec = decompose(w)
    n = len(w)
    if dec.ell and "1" in v[n - dec.ell:]:
        return False
    changed = []
    if v[: dec.m] != w[: dec.m]:
        changed.append(("ones", dec.m, 0, dec.m))
    for (a, b), (lo, hi) in zip(dec.factors, dec.block_spans()):
        if v[lo:hi] != w[lo:hi]:
            changed.append(("prime", (a, b), lo, hi))
    if len(changed) != 1:
        return False
    kind, shape, lo, hi = changed[0]
    piece = v[lo:hi]
    if kind == "ones":
        return piece in _ones_lower_covers(shape, q)
    return piece in _prime_lower_covers(*shape, q)


# -- the model -------------------------------------------------------------------

@dataclass
class LatticeModel:
    n: int
    q: QParam
    elements: list[Word]
    masks: np.ndarray
    index: dict[Word, int]
    upper_covers: list[list[int]]
    lower_covers: list[list[int]] = field(repr=False)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, w):
        return w in self.index

    @property
    def top(self) -> Word:
        return self.elements[-1]

    @property
    def bottom(self) -> Word:
        return self.elements[0]

    def edges(self) -> list[tuple[Word, Word]]:
        return [
            (self.elements[i], self.elements[j])
            for i, ups in enumerate(self.upper_covers)
            for j in ups
        ]

    def report(self) -> dict:
        return {
            "n": self.n,
            "q": str(self.q),
            "elements": len(self),
            "coverings": count_coverings(self),
            "intervals": count_intervals(self),
            "join_irreducible": len(join_irreducibles(self)),
            "meet_irreducible": len(meet_irreducibles(self)),
        }


def build_lattice(n: int, q, cap: int = DEFAULT_CAP) -> LatticeModel:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > 62:
        raise LatticeTooLarge("bit masks are limited to n <= 62")
    q = parse_q(q)
    size = count_words(n, q)
    if size > cap:
        raise LatticeTooLarge(f"|W_{n}^{q}| = {size} exceeds the cap {cap}")
    elements = enumerate_words(n, q)
    index = {w: i for i, w in enumerate(elements)}
    masks = np.array([to_mask(w) for w in elements], dtype=np.int64)
    ups: list[list[int]] = [[] for _ in elements]
    downs: list[list[int]] = [[] for _ in elements]
    for j, w in enumerate(elements):
        for v in lower_covers(w, q):
            i = index[v]
            ups[i].append(j)
            downs[j].append(i)
    for lst in ups:
        lst.sort()
    return LatticeModel(n, q, elements, masks, index, ups, downs)


def _mask(model: LatticeModel, w: Word) -> int:
    if w not in model.index:
        raise ValueError(f"{w!r} is not an element of W_{model.n}^{model.q}")
    return int(model.masks[model.index[w]])


def join(v: Word, w: Word, model: LatticeModel) -> Word:
    """Least upper bound: AND of every common upper bound."""
    mv, mw = _mask(model, v), _mask(model, w)
    m = model.masks
    ub = m[((m & mv) == mv) & ((m & mw) == mw)]
    return from_mask(int(np.bitwise_and.reduce(ub)), model.n)


def count_coverings(model: LatticeModel) -> int:
    return sum(len(u) for u in model.upper_covers)


def _count_below(model: LatticeModel, tops: np.ndarray, chunk: int = 512) -> int:
    m = model.masks
    total = 0
    for s in range(0, len(tops), chunk):
        t = tops[s : s + chunk, None]
        total += int(np.count_nonzero((m[None, :] & t) == m[None, :]))
    return total


def count_intervals(model: LatticeModel) -> int:
    """Ordered pairs v <= w, by vectorized subset tests."""
    return _count_below(model, model.masks)


def prime_words(model: LatticeModel) -> list[Word]:
    out = []
    for w in model.elements:
        dec = decompose(w)
        if dec.m == 0 and dec.ell == 0 and len(dec.factors) == 1:
            out.append(w)
    return out


def count_prime_intervals(model: LatticeModel) -> int:
    tops = np.array([to_mask(w) for w in prime_words(model)], dtype=np.int64)
    return _count_below(model, tops) if len(tops) else 0


def join_irreducibles(model: LatticeModel) -> list[Word]:
    return [w for w, d in zip(model.elements, model.lower_covers) if len(d) == 1]


def meet_irreducibles(model: LatticeModel) -> list[Word]:
    """Elements with exactly one upper cover (so the top is never counted)."""
    return [w for w, u in zip(model.elements, model.upper_covers) if len(u) == 1]


# -- definition-based oracle -------------------------------------------------------

def leq_matrix(model: LatticeModel) -> np.ndarray:
    m = model.masks
    return (m[:, None] & m[None, :]) == m[:, None]


def cover_matrix_by_definition(model: LatticeModel) -> np.ndarray:
    """C[i, j] true iff elements[i] < elements[j] with nothing strictly between."""
    strict = leq_matrix(model)
    np.fill_diagonal(strict, False)
    s = strict.astype(np.int32)
    return strict & ((s @ s) == 0)


def covers_by_definition(v: Word, w: Word, model: LatticeModel) -> bool:
    mv, mw = _mask(model, v), _mask(model, w)
    if mv == mw or (mv & mw) != mv:
        return False
    m = model.masks
    between = ((m & mv) == mv) & ((m & mw) == m) & (m != mv) & (m != mw)
    return not bool(between.any())


# -- export ------------------------------------------------------------------------

def _label(w: Word) -> str:
    return w if w else "ε"


def to_dot(model: LatticeModel) -> str:
    """Hasse diagram as a DOT digraph, edges pointing from lower to upper cover."""
    name = f"W_{model.n}_{model.q}".replace("/", "_")
    lines = [f'digraph "{name}" {{', "  rankdir=BT;"]
    for w in model.elements:
        lines.append(f'  "{_label(w)}";')
    for lo, hi in sorted(model.edges()):
        lines.append(f'  "{_label(lo)}" -> "{_label(hi)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
