from fractions import Fraction

import numpy as np
import pytest

from qdecreasing.asymptotics import growth_check, phi, phi_bracket, pi_polynomial, residue_growth
from qdecreasing.formulas import gf_words

TEST_Q = ["1", "2", "3", "1/2", "1/3", "2/3", "3/2", "5/2"]


@pytest.mark.parametrize(
    "q,value",
    [("1", 1.618033988750), ("2", 1.839286755214), ("1/2", 1.465571231877)],
)
def test_phi_known_constants(q, value):
    assert abs(float(phi(q, 1e-12)) - value) < 1e-12


def test_phi_closed_forms():
    assert abs(float(phi("1")) - (1 + 5**0.5) / 2) < 1e-12
    # 1/2: x0 solves x^3 + x = 1, so phi solves y^3 = y^2 + 1
    y = float(phi("1/2"))
    assert abs(y**3 - y**2 - 1) < 1e-10


@pytest.mark.parametrize("q", TEST_Q)
def test_phi_residual_and_bracket(q):
    tol = 1e-14
    lo, hi = phi_bracket(q, tol)
    poly = pi_polynomial(q)
    assert poly(lo) > 0 > poly(hi)
    assert hi - lo <= Fraction(tol)
    x0 = 1 / phi(q, tol)
    slope = abs(poly.derivative()(x0))
    assert abs(poly(x0)) <= tol * slope
    assert phi(q) > 1


@pytest.mark.parametrize("q", TEST_Q)
def test_phi_is_min_root_of_words_denominator(q):
    den = gf_words(q).den
    roots = np.roots([float(c) for c in reversed(den.coeffs)])
    real_pos = sorted(r.real for r in roots if abs(r.imag) < 1e-9 and r.real > 0)
    assert abs(real_pos[0] - 1 / float(phi(q, 1e-13))) < 2e-9
    assert min(abs(roots)) >= real_pos[0] - 1e-9


def test_phi_increases_with_q():
    qs = sorted(TEST_Q, key=Fraction)
    vals = [phi(q) for q in qs]
    assert vals == sorted(vals)


def test_phi_errors():
    with pytest.raises(ValueError):
        phi("1", 0)
    with pytest.raises(ValueError):
        phi("sqrt2")


def test_growth_words():
    est = growth_check("words", "1", 30, 60)
    assert est.spread < 1e-3
    assert est.verdict == "converged"
    assert all(r > 0 for r in est.ratios)


def test_growth_coverings_half_is_bounded_and_settling():
    est = growth_check("coverings", "1/2", 40, 80)
    assert all(0 < r < 10 for r in est.ratios)
    assert est.monotone_tail
    later = growth_check("coverings", "1/2", 60, 80)
    assert later.spread < est.spread


@pytest.mark.parametrize("q", ["1", "2", "2/3"])
def test_growth_coverings_tail_monotone(q):
    est = growth_check("coverings", q, 30, 90)
    assert est.monotone_tail
    assert all(r > 0 for r in est.ratios)


def test_growth_report_shape():
    d = growth_check("words", "2", 20, 40).to_dict()
    assert set(d) == {"q", "phi", "tol", "statistic", "window", "ratios", "spread", "monotone_tail", "verdict"}
    assert d["window"] == [20, 40] and len(d["ratios"]) == 21


def test_growth_errors():
    with pytest.raises(ValueError):
        growth_check("intervals", "1", 30, 60)
    with pytest.raises(ValueError):
        growth_check("words", "1", 5, 60)
    with pytest.raises(ValueError):
        growth_check("words", "1", 60, 60)


@pytest.mark.parametrize("q", ["1", "2", "1/2", "2/3", "5/2"])
def test_residue_growth(q):
    steps = residue_growth(q, 150, 220)
    assert all(abs(v - 1) < 1e-6 for v in steps.values())
