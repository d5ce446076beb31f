"""Acceptance criteria 1-13, one test each, each printing a PASS/FAIL line."""

import time
from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdecreasing import asymptotics, formulas, lattice, meet, oracle
from qdecreasing.gfcore import Poly, RatFun, floor_seq_gf, floor_transform, floor_transform_series
from qdecreasing.words import count_words

X = RatFun.x()
TEST_Q = ["1", "2", "3", "1/2", "1/3", "2/3", "3/2", "5/2"]
TEST_CD = [(1, 1), (2, 1), (3, 1), (1, 2), (1, 3), (2, 3), (3, 2), (5, 2)]


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\nacceptance {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail

    return emit


@lru_cache(maxsize=None)
def _verify(q):
    start = time.perf_counter()
    rep = oracle.verify(q, 14)
    return rep, time.perf_counter() - start


def test_01_word_counts(report):
    got = (
        count_words(4, "1"),
        count_words(4, "1/2"),
        count_words(3, "pi/2"),
        count_words(4, "1", strict=False),
        count_words(5, "1"),
    )
    report(1, got == (8, 6, 7, 13, 13), f"counts {got}")


def test_02_w5_lattice(report):
    r = lattice.build_lattice(5, "1").report()
    got = (r["coverings"], r["intervals"], r["join_irreducible"], r["meet_irreducible"])
    report(2, got == (20, 56, 5, 7), f"W_5^1 coverings/intervals/ji/mi = {got}")


KNOWN_C = {
    "1": [1, 2, 5, 10, 20, 38, 70, 127, 228],
    "2": [1, 4, 9, 22, 50, 108, 229, 476, 976],
    "1/2": [1, 2, 3, 6, 11, 18, 30, 50, 81],
    "1/3": [1, 2, 3, 4, 7, 12, 19, 28, 42],
}


def test_03_covering_series(report):
    bad = [q for q, v in KNOWN_C.items() if formulas.gf_coverings(q).integer_series(9)[1:] != v]
    report(3, not bad, f"mismatched q: {bad}" if bad else "q = 1, 2, 1/2, 1/3 match")


KNOWN_C_REAL = {
    "sqrt2": [1, 4, 9, 22, 46, 100, 207, 425, 856],
    "pi/4": [1, 2, 5, 10, 20, 38, 70, 127, 224],
    "e": [1, 4, 12, 28, 67, 154, 343, 749, 1615],
}


def test_04_irrational_coverings(report):
    bad = [
        q for q, v in KNOWN_C_REAL.items()
        if formulas.series_coverings_real(q, 9).coeffs[1:] != v
    ]
    report(4, not bad, f"mismatched q: {bad}" if bad else "sqrt2, pi/4, e match")


KNOWN_I = {
    "1": [1, 3, 6, 13, 27, 56, 115, 234, 474, 955],
    "2": [1, 3, 9, 22, 57, 145, 363, 909, 2261, 5608],
    "2/3": [1, 3, 6, 13, 27, 51, 100, 196, 376, 723],
    "3/2": [1, 3, 9, 22, 57, 136, 336, 811, 1966, 4721],
}


def test_05_interval_series(report):
    bad = [q for q, v in KNOWN_I.items() if formulas.gf_intervals(q).integer_series(9) != v]
    report(5, not bad, f"mismatched q: {bad}" if bad else "q = 1, 2, 2/3, 3/2 match")


def test_06_prime_interval_closed_form(report):
    p1 = X**3 * (X**4 - 2) / ((X - 1) ** 2 * (X + 1) * (X**4 + X**2 - 1))
    got = formulas.gf_prime_intervals("1")
    report(6, got == p1, f"P_1 = {got}")


def test_07_meet_five_halves(report):
    s = meet.factor_classes_high("5/2")
    den = 1 - X**7
    classes = (
        s["A"] == (X**3 + X**6) / den,
        s["B"] == (X**4 + X**7) / den,
        s["C"] == (X**2 + X**4 + X**5 + X**7 + X**8) / den,
        s["D"][0] == (X**4 + X**7 + X**8) / den,
        s["D"][1] == X**7 / den,
    )
    series = meet.gf_meet_high("5/2").integer_series(9)
    ok = all(classes) and series == [0, 1, 2, 3, 6, 9, 13, 23, 34, 52]
    report(7, ok, f"A,B,C,D1,D2 ok={classes}; series {series[1:]}")


def test_08_floor_golden(report):
    a = floor_seq_gf(3, 5, 2) == X * (X**4 + X**2 + 1) / ((1 - X) * (1 - X**5))
    b = floor_transform(1 / (1 - 2 * X), 2, 1) == X * (1 + 2 * X) / (1 - 4 * X**3)
    report(8, a and b, f"floor_seq_gf(3,5,2) {a}; floor_transform(1/(1-2x),2,1) {b}")


def test_09_oracle_conformance(report):
    start = time.perf_counter()
    failed = []
    for q in TEST_Q:
        rep, _ = _verify(q)
        if not rep.passed:
            failed.append((q, [(r.n, r.statistic) for r in rep.mismatches], rep.truncated_at))
    took = time.perf_counter() - start
    report(9, not failed and took <= 300, f"failures {failed}; {took:.1f}s")


def test_10_cover_equivalence(report):
    bad = [q for q in TEST_Q if not oracle.verify_covers_equivalence(q, 10)]
    report(10, not bad, f"disagreeing q: {bad}" if bad else "all q agree for n <= 10")


def test_11_join_irreducible_law(report):
    bad = []
    for q in TEST_Q:
        rep, _ = _verify(q)
        for n, brute, _, _ in rep.table("join_irr"):
            if brute != n:
                bad.append((q, n, brute))
    report(11, not bad, f"violations {bad}" if bad else "count = n for n <= 14, all q")


def test_12_asymptotics(report):
    start = time.perf_counter()
    p1 = float(asymptotics.phi("1"))
    p2 = float(asymptotics.phi("2"))
    phis_ok = abs(p1 - 1.618033988750) < 1e-10 and abs(p2 - 1.839286755214) < 1e-10
    est = asymptotics.growth_check("coverings", "1", 30, 60)
    took = time.perf_counter() - start
    ok = phis_ok and est.spread < 1e-2 and took <= 60
    report(
        12, ok,
        f"phi(1)={p1:.12f} phi(2)={p2:.12f}; coverings spread over 30..60 = {est.spread:.4g} "
        f"(threshold 1e-2); {took:.1f}s",
    )


small_int = st.integers(min_value=-5, max_value=5)


@st.composite
def rational_gf(draw):
    num = Poly(draw(st.lists(small_int, min_size=1, max_size=5)))
    den = Poly([1] + draw(st.lists(small_int, min_size=1, max_size=4)))
    return RatFun(num, den)


def test_13_floor_transform_sparsity(report):
    checked = []

    @settings(max_examples=25, deadline=None, derandomize=True, database=None)
    @given(rational_gf())
    def prop(g):
        coeffs = g.series(120)
        for c, d in TEST_CD:
            assert floor_transform(g, c, d).series(120) == floor_transform_series(coeffs, c, d, 120)
        checked.append(g)

    try:
        prop()
        ok, detail = True, f"{len(checked)} random g x {len(TEST_CD)} (c,d) pairs to order 120"
    except AssertionError as e:
        ok, detail = False, f"counterexample: {e}"
    report(13, ok, detail)
