"""The parameter q: exact rationals c/d and guarded irrational reals.

Every combinatorial test in this package reduces to the sign of ``q*a - b``
for integers ``a`` and ``b``.  Rationals answer that exactly; irrational
built-ins answer it by interval evaluation at doubling precision.
"""

from __future__ import annotations

import math
import os
import re
from contextlib import contextmanager
from fractions import Fraction
from typing import Callable

from mpmath import iv

DEFAULT_MAX_PRECISION = int(os.environ.get("QDWORDS_PRECISION_BITS", "512"))
_START_PRECISION = 64


class PrecisionError(ArithmeticError):
    """A real comparison stayed undecided at the precision cap."""


@contextmanager
def _ivprec(bits):
    saved = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = saved


def _least(pred: Callable[[int], bool], start: int = 0) -> int:
    """Smallest integer k >= start with pred(k), for pred monotone false->true."""
    if pred(start):
        return start
    lo, step = start, 1
    while not pred(lo + step):
        lo += step
        step *= 2
    hi = lo + step
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return hi


class QParam:
    """Base class for the parameter q; subclasses implement :meth:`sign`."""

    is_rational = False

    def sign(self, a: int, b: int) -> int:
        """Sign of ``q*a - b``."""
        raise NotImplementedError

    def gt(self, a: int, b: int) -> bool:
        """``q*a > b``."""
        return self.sign(a, b) > 0

    def ge(self, a: int, b: int) -> bool:
        """``q*a >= b``."""
        return self.sign(a, b) >= 0

    def floor_div(self, b: int) -> int:
        """floor(b / q) for b >= 0, i.e. the largest k with q*k <= b."""
        if b < 0:
            raise ValueError("b must be non-negative")
        return _least(lambda k: self.sign(k + 1, b) > 0)

    def max_ones(self, a: int) -> int:
        """Largest b >= 0 with q*a > b, or -1 when none (a = 0 or q = 0)."""
        if not self.gt(a, 0):
            return -1
        return _least(lambda b: not self.gt(a, b + 1))

    def max_ones_plus(self, a: int) -> int:
        """Largest b >= 0 with q*a >= b."""
        return _least(lambda b: not self.ge(a, b + 1))

    def ceil_ratio(self, n: int, shift: int = 0) -> int:
        """ceil((q*n + shift) / (q + 1)) for n >= 0.

        The least k with ``k*(q+1) >= q*n + shift``, i.e. ``q*(n-k) <= k-shift``.
        """
        return _least(lambda k: self.sign(n - k, k - shift) <= 0, start=min(0, shift))


class RationalQ(QParam):
    """q = c/d in lowest terms (c = 0 allowed only as the special value 0/1)."""

    is_rational = True

    def __init__(self, c: int, d: int = 1):
        if isinstance(c, Fraction):
            c, d = c.numerator * d, c.denominator
        c, d = int(c), int(d)
        if d <= 0 or c < 0:
            raise ValueError(f"q must be a non-negative fraction, got {c}/{d}")
        g = math.gcd(c, d)
        self.c, self.d = c // g, d // g
        if self.c == 0:
            self.d = 1

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.c, self.d)

    def sign(self, a, b):
        v = self.c * a - self.d * b
        return (v > 0) - (v < 0)

    def floor_div(self, b):
        if self.c == 0:
            raise ZeroDivisionError("floor(b/q) undefined for q = 0")
        return (self.d * b) // self.c

    def max_ones(self, a):
        if a <= 0 or self.c == 0:
            return -1
        return (self.c * a - 1) // self.d

    def max_ones_plus(self, a):
        return (self.c * a) // self.d

    def ceil_ratio(self, n, shift=0):
        c, d = self.c, self.d
        return -((-(c * n + d * shift)) // (c + d))

    def __eq__(self, other):
        return isinstance(other, RationalQ) and (self.c, self.d) == (other.c, other.d)

    def __hash__(self):
        return hash((self.c, self.d))

    def __str__(self):
        return f"{self.c}/{self.d}"

    def __repr__(self):
        return f"RationalQ({self.c}, {self.d})"


class RealQ(QParam):
    """An irrational q given by an interval evaluator ``fn()`` run at ``iv.prec``.

    ``q*a == b`` never holds for a != 0, so refinement terminates; the cap
    only guards against evaluators that are not actually irrational.
    """

    def __init__(self, name: str, fn: Callable[[], object], max_precision: int | None = None):
        self.name = name
        self._fn = fn
        self.max_precision = max_precision or DEFAULT_MAX_PRECISION
        self._signs: dict[tuple[int, int], int] = {}

    def interval(self, bits: int):
        with _ivprec(bits):
            return self._fn()

    def sign(self, a, b):
        if a == 0:
            return (b < 0) - (b > 0)
        key = (a, b)
        cached = self._signs.get(key)
        if cached is not None:
            return cached
        bits = _START_PRECISION
        while bits <= self.max_precision:
            with _ivprec(bits):
                y = self._fn() * a - b
                if y.a > 0:
                    s = 1
                    break
                if y.b < 0:
                    s = -1
                    break
            bits *= 2
        else:
            raise PrecisionError(
                f"sign of {self.name}*{a} - {b} undecided at {self.max_precision} bits"
            )
        self._signs[key] = s
        return s

    def approx(self) -> float:
        return float(self.interval(64).mid)

    def __eq__(self, other):
        return isinstance(other, RealQ) and other.name == self.name

    def __hash__(self):
        return hash(self.name)

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"RealQ({self.name!r})"


BUILTIN_REALS: dict[str, Callable[[], object]] = {
    "sqrt2": lambda: iv.sqrt(2),
    "sqrt3": lambda: iv.sqrt(3),
    "pi": lambda: iv.pi,
    "pi/2": lambda: iv.pi / 2,
    "pi/4": lambda: iv.pi / 4,
    "e": lambda: iv.e,
    "phi": lambda: (1 + iv.sqrt(5)) / 2,
}

_RATIONAL_RE = re.compile(r"^\s*(\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_q(text: str | QParam | int | Fraction, max_precision: int | None = None) -> QParam:
    """Parse ``"c/d"``, an integer, or a built-in name; decimals are rejected."""
    if isinstance(text, QParam):
        return text
    if isinstance(text, bool):
        raise TypeError("q cannot be a bool")
    if isinstance(text, int):
        return RationalQ(text, 1)
    if isinstance(text, Fraction):
        return RationalQ(text.numerator, text.denominator)
    if not isinstance(text, str):
        raise TypeError(f"cannot interpret {text!r} as q")
    key = text.strip()
    if key in BUILTIN_REALS:
        return RealQ(key, BUILTIN_REALS[key], max_precision)
    m = _RATIONAL_RE.match(key)
    if not m:
        raise ValueError(
            f"q must be 'c/d', an integer or one of {sorted(BUILTIN_REALS)}; got {text!r}"
        )
    c, d = int(m.group(1)), int(m.group(2) or 1)
    if d == 0:
        raise ValueError("zero denominator")
    return RationalQ(c, d)


def require_positive_rational(q) -> RationalQ:
    """Coerce to a rational q > 0, the domain of every closed form."""
    q = parse_q(q)
    if not isinstance(q, RationalQ):
        raise ValueError(f"closed forms need a rational q, got {q}")
    if q.c == 0:
        raise ValueError("closed forms need q > 0")
    return q
