import pytest

from qdecreasing.gfcore import RatFun
from qdecreasing.lattice import build_lattice, meet_irreducibles
from qdecreasing.meet import (
    admissible_factor_gf,
    alphabet_high,
    alphabet_low,
    factor_classes_high,
    factor_classes_low,
    gf_meet,
    gf_meet_high,
    gf_meet_low,
    gf_meet_transfer,
    letter_count,
    meet_parts,
    pattern_count,
)
from qdecreasing.qparam import parse_q

X = RatFun.x()
HIGH = ["2", "3", "3/2", "5/2", "7/2", "4", "7/3", "10/3"]
LOW = ["1", "1/2", "1/3", "2/3", "3/4", "2/5"]

DEN_5_2 = (
    X**20 - X**18 - 2 * X**17 + X**15 + X**14 + 2 * X**12 + X**10 + 2 * X**9
    - X**8 - 3 * X**7 - X**6 - X**5 - X**3 - X**2 + 1
)


def brute_meet_counts(q, n_max):
    return [0] + [len(meet_irreducibles(build_lattice(n, q))) for n in range(1, n_max + 1)]


# -- the worked q = 5/2 case ------------------------------------------------------------

def test_classes_5_2():
    s = factor_classes_high("5/2")
    den = 1 - X**7
    assert s["A"] == (X**3 + X**6) / den
    assert s["B"] == (X**4 + X**7) / den
    assert s["C"] == (X**2 + X**4 + X**5 + X**7 + X**8) / den
    assert s["D"][0] == (X**4 + X**7 + X**8) / den
    assert s["D"][1] == X**7 / den


def test_letters_5_2():
    s = factor_classes_high("5/2")
    A, B, C, (D1, D2) = s["A"], s["B"], s["C"], s["D"]
    letters = alphabet_high("5/2").letters
    assert letters["a"] == A - X**3
    assert letters["b"] == X**3
    assert letters["c"] == C - D1 - X**2
    assert letters["d"] == B - D2
    assert letters["e"] == D2
    assert letters["f1"] == X**2
    assert letters["g1"] == D1 - B


def test_forbidden_5_2():
    expected = {"cd", "ce", "dd", "de", "eb", "ed", "ee", "df", "ef", "fd", "fe", "gd", "ge", "gf"}
    got = {a[0] + b[0] for a, b in alphabet_high("5/2").forbidden}
    assert got == expected
    assert len(alphabet_high("5/2").forbidden) == 14


def test_parts_5_2_known():
    M0, M1 = meet_parts("5/2")
    m1 = -(X**2 * (X**2 + 1) * (X**5 - X**4 - X**3 + X**2 - 1)
           * (X**11 + X**10 - 2 * X**8 - 2 * X**7 + X**5 - X**4 + X**2 + X + 1)) / DEN_5_2
    m0 = -(X * (X**7 - 1) * (X**10 - X**8 - X**7 - X**5 - X**2 + 1)) / DEN_5_2
    assert M1 == m1
    assert M0 == m0


def test_parts_5_2_symbolic_forms():
    s = factor_classes_high("5/2")
    A, B, C, (D1, D2) = s["A"], s["B"], s["C"], s["D"]
    den = D2 * (B - D1) * X**5 - D2 * (B - C + 1) * X**3 + ((1 - A) * B - D1) * X**2 + (A - 1) * B + A + C - 1
    m1 = (-D2 * (B - D1) * X**5 + D2 * (B - C + 1) * X**3 + (A * B + D1) * X**2 - A * B - A - C) / den
    m0 = ((B - D1) * X**2 - B + C - 1) * X / den
    assert meet_parts("5/2") == (m0, m1)


def test_meet_5_2_known():
    m = (
        X**20 - 2 * X**17 - 2 * X**16 + X**14 - 2 * X**13 + 2 * X**12 + 4 * X**9 + X**8
        - 2 * X**7 + X**6 - X**5 - X**4 - X**2 - X
    ) / ((X - 1) * DEN_5_2)
    assert gf_meet_high("5/2") == m
    assert gf_meet_high("5/2").integer_series(9) == [0, 1, 2, 3, 6, 9, 13, 23, 34, 52]


# -- audits and identities -----------------------------------------------------------------

@pytest.mark.parametrize("q", HIGH)
def test_alphabet_sizes(q):
    alpha = alphabet_high(q)
    assert len(alpha.letters) == letter_count(q)
    assert len(alpha.forbidden) == pattern_count(q)


@pytest.mark.parametrize("q", HIGH)
def test_letters_partition_high(q):
    total = sum(alphabet_high(q).letters.values(), RatFun(0))
    assert total == X**2 / (1 - X) == admissible_factor_gf(q)


@pytest.mark.parametrize("q", LOW)
def test_letters_partition_low(q):
    r = parse_q(q)
    total = sum(alphabet_low(q).letters.values(), RatFun(0))
    assert total == X ** (2 + r.d // r.c) / (1 - X) == admissible_factor_gf(q)


@pytest.mark.parametrize("q", HIGH)
def test_B_is_x_times_A(q):
    s = factor_classes_high(q)
    assert s["B"] == X * s["A"]


@pytest.mark.parametrize("q", LOW)
def test_low_classes(q):
    s = factor_classes_low(q)
    assert s["C"] == s["A"] / X - X ** (1 + parse_q(q).d // parse_q(q).c)


@pytest.mark.parametrize("q", HIGH)
def test_letters_are_counting_series(q):
    for name, f in alphabet_high(q).letters.items():
        assert all(v in (0, 1) for v in f.integer_series(40)), name


def test_degenerate_alphabet_at_ceiling_two():
    for q in ["2", "3/2", "5/3"]:
        alpha = alphabet_high(q)
        assert set(alpha.letters) == set("abcde")
        assert {a + b for a, b in alpha.forbidden} == {"cd", "ce", "dd", "de", "eb", "ed", "ee"}
        assert gf_meet_high(q).integer_series(11) == brute_meet_counts(q, 11)


@pytest.mark.parametrize("q", LOW)
def test_low_m1_formula(q):
    s = factor_classes_low(q)
    A, B, C = s["A"], s["B"], s["C"]
    assert meet_parts(q)[1] == (A + B + C * A) / (1 - A - (B - C) - C * A)


@pytest.mark.parametrize("q", LOW)
def test_low_closed_form_equals_transfer(q):
    assert gf_meet_low(q) == gf_meet_transfer(q)


def test_routing():
    assert gf_meet("1") == gf_meet_low("1")
    with pytest.raises(ValueError):
        gf_meet_high("1")
    with pytest.raises(ValueError):
        gf_meet_low("3/2")


# -- brute force ------------------------------------------------------------------------------

@pytest.mark.parametrize("q", HIGH[:6] + LOW)
def test_meet_counts_brute(q):
    assert gf_meet(q).integer_series(12) == brute_meet_counts(q, 12)


def test_meet_low_small_values():
    s = gf_meet_low("1").integer_series(5)
    assert s[1] == 1 and s[5] == 7
