"""Generating functions for the lattice statistics of q-decreasing words.

Closed forms (``gf_*``) take a rational q = c/d > 0 and return a canonical
:class:`RatFun`.  The ``series_*`` evaluators take any q, rational or
irrational, and return exact truncated coefficient lists built from the
defining sums, touching q only through sign comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .gfcore import (
    Poly,
    RatFun,
    floor_exponent,
    floor_seq_gf,
    floor_transform,
    tadd,
    tinv,
    tmul,
)
from .qparam import QParam, parse_q, require_positive_rational

X = RatFun.x()
ONE = RatFun(1)


def _geom(k: int) -> Poly:
    """1 - x**k."""
    return Poly([1]) - Poly.monomial(k)


@dataclass
class SeriesReport:
    q: str
    statistic: str
    coeffs: list[int]
    order: int = field(init=False)

    def __post_init__(self):
        self.order = len(self.coeffs) - 1


def pi_polynomial(q) -> Poly:
    """1 - x^(c+d) - sum_{i<c} x^(1 + i + floor(i d / c))."""
    q = require_positive_rational(q)
    c, d = q.c, q.d
    terms = [(0, 1), (c + d, -1)] + [(1 + i + (i * d) // c, -1) for i in range(c)]
    return Poly.from_terms(terms)


# -- words ------------------------------------------------------------------

def gf_words(q) -> RatFun:
    q = require_positive_rational(q)
    return RatFun(_geom(q.c + q.d), Poly([1, -1]) * pi_polynomial(q))


def _positive_q(q) -> QParam:
    q = parse_q(q)
    if not q.gt(1, 0):
        raise ValueError("q must be positive")
    return q


def _run_exponents(q: QParam, order: int):
    """Exponents 1 + i + floor(i/q), i >= 0, not exceeding ``order``."""
    i = 0
    while True:
        e = 1 + i + q.floor_div(i)
        if e > order:
            return
        yield e
        i += 1


def series_words_real(q, order: int) -> SeriesReport:
    """Coefficients of 1 / ((1-x)(1 - sum_i x^(1+i+floor(i/q)))) up to ``order``."""
    q = _positive_q(q)
    inner = [1] + [0] * order
    for e in _run_exponents(q, order):
        inner[e] -= 1
    coeffs = tmul(tinv(inner, order), [1] * (order + 1), order)
    return SeriesReport(str(q), "words", coeffs)


# -- coverings ---------------------------------------------------------------

def gf_A(q) -> RatFun:
    """Lower covers of 1^n: sum_{n>=1} ceil(q n / (q+1)) x^n."""
    q = require_positive_rational(q)
    c, d = q.c, q.d
    return 1 + X / (1 - X) + floor_seq_gf(c, c + d, -1)


def _b_weight_poly(c: int, d: int) -> Poly:
    s = c + d
    return (
        Poly.x() * _geom(s)
        + Poly.monomial(s, c)
        + Poly([1, -1]) * Poly((c * r + d - 1) // s for r in range(s))
    )


def gf_B(q) -> RatFun:
    """Lower covers of the prime words 0^a 1^b, summed by length."""
    q = require_positive_rational(q)
    c, d = q.c, q.d
    s = c + d
    spread = Poly([1] * c) * Poly.from_terms((s * k, 1) for k in range(c))
    coeffs = (_b_weight_poly(c, d) * spread).coeffs
    num = Poly.from_terms((floor_exponent(k, c, d), a) for k, a in enumerate(coeffs))
    return RatFun(num, Poly([1, -1]) * _geom(s) * _geom(s * s))


def gf_B_via_transform(q) -> RatFun:
    """Same series as :func:`gf_B`, obtained through :func:`floor_transform`."""
    q = require_positive_rational(q)
    c, d = q.c, q.d
    weights = RatFun(_b_weight_poly(c, d), Poly([1, -1]) * _geom(c + d))
    return floor_transform(weights, c, d) / (1 - X)


def gf_D(q) -> RatFun:
    """Prime words 0^a 1^b (q a > b >= 1) counted by length."""
    q = require_positive_rational(q)
    c, d = q.c, q.d
    num = Poly.from_terms((floor_exponent(k, c, d), 1) for k in range(1, c + 1))
    return RatFun(num, Poly([1, -1]) * _geom(c + d))


def _assemble_coverings(A, B, D):
    return A / ((1 - X) * (1 - D)) + B / ((1 - X) ** 2 * (1 - D) ** 2)


def gf_coverings(q) -> RatFun:
    q = require_positive_rational(q)
    return _assemble_coverings(gf_A(q), gf_B(q), gf_D(q))


def series_A(q, order: int) -> list[int]:
    q = _positive_q(q)
    return [0] + [q.ceil_ratio(n) for n in range(1, order + 1)]


def _prime_length_terms(q: QParam, order: int):
    """(b, 1 + b + floor(b/q)) for b >= 1 while the length fits."""
    b = 1
    while True:
        e = 1 + b + q.floor_div(b)
        if e > order:
            return
        yield b, e
        b += 1


def series_B(q, order: int) -> list[int]:
    q = _positive_q(q)
    out = [0] * (order + 1)
    for b, e in _prime_length_terms(q, order):
        w = q.ceil_ratio(b, shift=1)
        for n in range(e, order + 1):
            out[n] += w
    return out


def series_D(q, order: int) -> list[int]:
    q = _positive_q(q)
    out = [0] * (order + 1)
    for _, e in _prime_length_terms(q, order):
        for n in range(e, order + 1):
            out[n] += 1
    return out


def series_coverings_real(q, order: int) -> SeriesReport:
    """Covering counts from the defining sums of A, B and D, valid for any q > 0."""
    q = _positive_q(q)
    A, B, D = series_A(q, order), series_B(q, order), series_D(q, order)
    geo = [1] * (order + 1)
    inv_d = tinv([1] + [-v for v in D[1:]], order)
    first = tmul(tmul(A, geo, order), inv_d, order)
    inv_d2 = tmul(inv_d, inv_d, order)
    geo2 = tmul(geo, geo, order)
    second = tmul(tmul(B, geo2, order), inv_d2, order)
    return SeriesReport(str(q), "coverings", tadd(first, second, order=order))


# -- join-irreducibles, intervals ---------------------------------------------

def gf_join_irreducible() -> RatFun:
    return X / (1 - X) ** 2


def gf_gamma(q) -> RatFun:
    """x (1 + W_q) / (1 - x): 1 + sum_{k<b} |W_k| summed over b >= 1."""
    return X * (1 + gf_words(q)) / (1 - X)


def gf_prime_intervals(q) -> RatFun:
    q = require_positive_rational(q)
    return floor_transform(gf_gamma(q), q.c, q.d) / (1 - X)


def gf_intervals(q) -> RatFun:
    q = require_positive_rational(q)
    return gf_words(q) / ((1 - X) * (1 - gf_prime_intervals(q)))


# -- catalog ------------------------------------------------------------------

def gf(statistic: str, q) -> RatFun:
    """Closed form of a named statistic for rational q."""
    from . import meet

    table = {
        "words": gf_words,
        "coverings": gf_coverings,
        "prime_intervals": gf_prime_intervals,
        "intervals": gf_intervals,
        "join_irreducible": lambda q: gf_join_irreducible(),
        "meet_irreducible": meet.gf_meet,
        "A": gf_A,
        "B": gf_B,
        "D": gf_D,
        "P": gf_prime_intervals,
        "M0": lambda q: meet.meet_parts(q)[0],
        "M1": lambda q: meet.meet_parts(q)[1],
    }
    if statistic not in table:
        raise KeyError(f"unknown statistic {statistic!r}; choose from {sorted(table)}")
    q = require_positive_rational(q)
    return table[statistic](q)


REAL_SERIES = {
    "words": lambda q, n: series_words_real(q, n).coeffs,
    "coverings": lambda q, n: series_coverings_real(q, n).coeffs,
    "A": series_A,
    "B": series_B,
    "D": series_D,
}

STATISTICS = (
    "words",
    "coverings",
    "prime_intervals",
    "intervals",
    "join_irreducible",
    "meet_irreducible",
    "A",
    "B",
    "D",
    "P",
    "M0",
    "M1",
)
