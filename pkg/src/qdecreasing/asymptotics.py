"""Growth constant Phi(q) and numerical checks of the growth laws."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

from .formulas import gf_coverings, gf_prime_intervals, gf_words, pi_polynomial
from .qparam import require_positive_rational

__all__ = [
    "GrowthEstimate",
    "growth_check",
    "phi",
    "phi_bracket",
    "pi_polynomial",
    "residue_growth",
]

# thresholds on the relative range (max - min) / mean of the normalized ratios
SPREAD_THRESHOLDS = {"words": 1e-3, "coverings": 1e-2}


def phi_bracket(q, tol: float = 1e-12) -> tuple[Fraction, Fraction]:
    """Rational bracket (lo, hi) around the root x0 of Pi_q in (0, 1).

    Pi_q(0) = 1 and Pi_q(1) = -c; every other coefficient is negative, so
    the root is unique and bisection on exact signs finds it.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    poly = pi_polynomial(q)
    lo, hi = Fraction(0), Fraction(1)
    if not (poly(lo) > 0 > poly(hi)):
        raise AssertionError(f"Pi_q has no sign change on (0, 1) for q = {q}")
    tol = Fraction(tol)
    while hi - lo > tol / 4:
        mid = (lo + hi) / 2
        if poly(mid) > 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def phi(q, tol: float = 1e-12) -> Fraction:
    """Phi(q) = 1/x0 as an exact rational within ``tol`` of the true value."""
    lo, hi = phi_bracket(q, tol)
    return (1 / lo + 1 / hi) / 2


@dataclass
class GrowthEstimate:
    q: str
    phi: float
    tol: float
    statistic: str
    window: tuple[int, int]
    ratios: list[float]
    spread: float
    monotone_tail: bool
    verdict: str

    def to_dict(self) -> dict:
        d = asdict(self)
        d["window"] = list(self.window)
        return d


def _ratio(coeff: int, n: int, ph: Fraction, weight_n: bool) -> float:
    r = Fraction(coeff) / ph**n
    if weight_n:
        r /= n
    return float(r)


def growth_check(statistic: str, q, n_lo: int, n_hi: int, tol: float = 1e-15) -> GrowthEstimate:
    """Normalized coefficients over [n_lo, n_hi]: [x^n]/Phi^n for words,
    [x^n]/(n Phi^n) for coverings, and their relative range."""
    if statistic not in SPREAD_THRESHOLDS:
        raise ValueError(f"statistic must be one of {sorted(SPREAD_THRESHOLDS)}")
    if not (n_hi > n_lo >= 10):
        raise ValueError("need n_hi > n_lo >= 10")
    q = require_positive_rational(q)
    f = gf_words(q) if statistic == "words" else gf_coverings(q)
    coeffs = f.integer_series(n_hi)
    ph = phi(q, tol)
    ratios = [_ratio(coeffs[n], n, ph, statistic == "coverings") for n in range(n_lo, n_hi + 1)]
    mean = sum(ratios) / len(ratios)
    spread = (max(ratios) - min(ratios)) / mean
    half = ratios[len(ratios) // 2 :]
    diffs = [b - a for a, b in zip(half, half[1:])]
    monotone = all(x >= 0 for x in diffs) or all(x <= 0 for x in diffs)
    ok = min(ratios) > 0 and spread < SPREAD_THRESHOLDS[statistic]
    return GrowthEstimate(
        str(q), float(ph), tol, statistic, (n_lo, n_hi), ratios, spread, monotone,
        "converged" if ok else "not converged",
    )


def residue_growth(q, n_lo: int, n_hi: int, tol: float = 1e-15) -> dict[int, float]:
    """Per residue r mod (c+d): ratio of [x^((c+d)(k+1)+r)] P_q to [x^((c+d)k+r)] P_q
    at the last full step inside [n_lo, n_hi], divided by Phi(q)^c (tends to 1)."""
    q = require_positive_rational(q)
    s = q.c + q.d
    coeffs = gf_prime_intervals(q).integer_series(n_hi)
    target = phi(q, tol) ** q.c
    out = {}
    for r in range(s):
        idx = [n for n in range(n_lo, n_hi + 1) if n % s == r]
        if len(idx) < 2:
            raise ValueError("window too short for a per-residue step")
        a, b = coeffs[idx[-2]], coeffs[idx[-1]]
        out[r] = float(Fraction(b, a) / target)
    return out
