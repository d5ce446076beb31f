"""Exact univariate polynomials and rational power series over the rationals.

``Poly`` is a dense coefficient tuple (index = exponent) of ``Fraction``;
``RatFun`` is a reduced quotient whose denominator is a primitive integer
polynomial with positive constant term, so equal functions compare equal
structurally.  Also here: the floor-sequence generating function, the
root-power (norm) transform and the floor-exponent transform of a
rational series, all computed without leaving the rationals.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Callable, Iterable, Sequence

Number = int | Fraction


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def _fmt_rational(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


class Poly:
    """Dense polynomial in x with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def monomial(cls, k: int, coeff: Number = 1) -> Poly:
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [coeff])

    @classmethod
    def x(cls) -> Poly:
        return cls([0, 1])

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[int, Number]]) -> Poly:
        """Sum of ``coeff * x**k`` over (k, coeff) pairs; repeated k accumulate."""
        acc: dict[int, Fraction] = {}
        for k, c in terms:
            acc[k] = acc.get(k, Fraction(0)) + _frac(c)
        if not acc:
            return cls()
        cs = [Fraction(0)] * (max(acc) + 1)
        for k, c in acc.items():
            cs[k] = c
        return cls(cs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly([other])
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        n = max(len(self), len(other))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        if not self or not other:
            return Poly()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: Poly):
        other = _as_poly(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = 1 / other.lc
        quo = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            f = rem[k] * inv
            if f:
                quo[k - dq] = f
                for j, b in enumerate(other.coeffs):
                    rem[k - dq + j] -= f * b
        return Poly(quo), Poly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("polynomial division is not exact")
        return q

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def compose_power(self, k: int) -> Poly:
        """p(x**k)."""
        return self.map_exponents(lambda e: e * k)

    def map_exponents(self, f: Callable[[int], int]) -> Poly:
        """Sum of ``a_e x**f(e)``."""
        return Poly.from_terms((f(e), c) for e, c in enumerate(self.coeffs) if c)

    def scale(self, s: Number) -> Poly:
        s = _frac(s)
        return Poly(c * s for c in self.coeffs)

    def derivative(self) -> Poly:
        return Poly(k * c for k, c in enumerate(self.coeffs) if k)

    def content(self) -> Fraction:
        """Positive rational g with ``self / g`` a primitive integer polynomial."""
        if not self:
            return Fraction(1)
        den = reduce(math.lcm, (c.denominator for c in self.coeffs), 1)
        num = reduce(math.gcd, (c.numerator * (den // c.denominator) for c in self.coeffs), 0)
        return Fraction(num, den)

    def primitive(self) -> Poly:
        return self.scale(1 / self.content()) if self else self

    def integer_coeffs(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise ValueError("polynomial has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    def to_strings(self) -> list[str]:
        return [_fmt_rational(c) for c in self.coeffs]

    def __str__(self):
        if not self:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            s = _fmt_rational(c)
            parts.append(s if k == 0 else f"{s}*x" if k == 1 else f"{s}*x^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly([{', '.join(self.to_strings())}])"


def _as_poly(v):
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly([v])
    return NotImplemented


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists (low degree first)."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        f, k = r[-1], len(r) - 1 - db
        r = [x * lb for x in r]
        for j, y in enumerate(b):
            r[k + j] -= f * y
        while r and r[-1] == 0:
            r.pop()
    return r


def _int_primitive(a: list[int]) -> list[int]:
    g = reduce(math.gcd, a, 0)
    return [x // g for x in a] if g > 1 else a


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Greatest common divisor, normalized primitive with positive leading coefficient.

    Primitive pseudo-remainder sequence over the integers.
    """
    if not p:
        return q.primitive() if q else Poly([1])
    if not q:
        return p.primitive()
    a = p.primitive().integer_coeffs()
    b = q.primitive().integer_coeffs()
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        a, b = b, _int_primitive(r) if r else []
    g = Poly(a)
    return g if g.lc > 0 else -g


class RatFun:
    """Reduced rational function num/den with den(0) != 0 (a power series at 0)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduce_: bool = True):
        num = _as_poly(num) if not isinstance(num, Poly) else num
        den = Poly([1]) if den is None else (_as_poly(den) if not isinstance(den, Poly) else den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if reduce_:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
        if den[0] == 0:
            if not num:
                den = Poly([1])
            else:
                raise ValueError("rational function has a pole at 0; not a power series")
        # den primitive over Z with positive constant term
        s = den.content()
        if den[0] < 0:
            s = -s
        self.num = num.scale(1 / s)
        self.den = den.scale(1 / s)

    @classmethod
    def x(cls) -> RatFun:
        return cls(Poly.x())

    @classmethod
    def monomial(cls, k: int, coeff: Number = 1) -> RatFun:
        return cls(Poly.monomial(k, coeff))

    def __eq__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return False
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RatFun(-self.num, self.den, reduce_=False)

    def __add__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_ratfun(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ZeroDivisionError("division by the zero series")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return _as_ratfun(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return RatFun(1) / self**(-k)
        return RatFun(self.num**k, self.den**k)

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def series(self, order: int) -> list[Fraction]:
        return series(self, order)

    def integer_series(self, order: int) -> list[int]:
        out = []
        for v in series(self, order):
            if v.denominator != 1:
                raise ValueError(f"non-integer coefficient {v}")
            out.append(v.numerator)
        return out

    def __str__(self):
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RatFun({self.num!r}, {self.den!r})"


def _as_ratfun(v):
    if isinstance(v, RatFun):
        return v
    if isinstance(v, (int, Fraction, Poly)):
        return RatFun(v)
    return NotImplemented


def series(f: RatFun | Poly, order: int) -> list[Fraction]:
    """Taylor coefficients a_0..a_order, from the recurrence den * a = num."""
    if isinstance(f, Poly):
        f = RatFun(f)
    den, num = f.den.coeffs, f.num
    if order < 0:
        return []
    d0 = den[0]
    if d0 == 0:
        raise ValueError("denominator vanishes at 0")
    out: list[Fraction] = []
    for n in range(order + 1):
        acc = num[n]
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * out[n - k]
        out.append(acc / d0)
    return out


# -- truncated power series on coefficient lists (length order + 1) --------

def tmul(a: Sequence, b: Sequence, order: int) -> list:
    out = [0] * (order + 1)
    for i, x in enumerate(a[: order + 1]):
        if x:
            for j, y in enumerate(b[: order + 1 - i]):
                out[i + j] += x * y
    return out


def tinv(a: Sequence, order: int) -> list:
    """Reciprocal of a truncated series with a[0] == 1 (exact for integers)."""
    if a[0] == 0:
        raise ZeroDivisionError("series has no reciprocal")
    a0 = a[0]
    out = []
    for n in range(order + 1):
        acc = (1 if n == 0 else 0) - sum(a[k] * out[n - k] for k in range(1, min(n, len(a) - 1) + 1))
        out.append(acc if a0 == 1 else Fraction(acc) / a0)
    return out


def tadd(*seqs: Sequence, order: int) -> list:
    out = [0] * (order + 1)
    for s in seqs:
        for i, x in enumerate(s[: order + 1]):
            out[i] += x
    return out


def tscale(a: Sequence, s, order: int) -> list:
    return [x * s for x in a[: order + 1]] + [0] * max(0, order + 1 - len(a))


# -- floor machinery --------------------------------------------------------

def floor_seq_gf(a: int, b: int, c: int) -> RatFun:
    """Generating function of floor((a*n + c) / b), n >= 0, for coprime a, b > 0."""
    if a <= 0 or b <= 0:
        raise ValueError("a and b must be positive")
    if math.gcd(a, b) != 1:
        raise ValueError(f"a={a} and b={b} are not coprime")
    one_minus_x = Poly([1, -1])
    qpoly = Poly((a * r + c) // b for r in range(b))
    num = Poly.monomial(b, a) + one_minus_x * qpoly
    den = one_minus_x * (Poly([1]) - Poly.monomial(b))
    return RatFun(num, den)


def _power_sums(monic: Sequence[Fraction], count: int) -> list[Fraction]:
    """p_1..p_count of the roots of x^s + e1 x^(s-1) + ... + es (Newton)."""
    s = len(monic) - 1
    e = [monic[s - k] for k in range(s + 1)]  # e[k] = coeff of x^(s-k)
    p = [Fraction(0)] * (count + 1)
    for k in range(1, count + 1):
        acc = Fraction(0)
        for i in range(1, min(k - 1, s) + 1):
            acc += e[i] * p[k - i]
        if k <= s:
            acc += k * e[k]
        p[k] = -acc
    return p


def _monic_from_power_sums(p: Sequence[Fraction], s: int) -> list[Fraction]:
    """Inverse Newton: coefficients (low first) of the monic degree-s polynomial."""
    e = [Fraction(1)] + [Fraction(0)] * s
    for k in range(1, s + 1):
        acc = p[k]
        for i in range(1, k):
            acc += e[i] * p[k - i]
        e[k] = -acc / k
    return [e[s - j] for j in range(s + 1)]


def root_power_transform(Q: Poly, c: int) -> Poly:
    """lc(Q)^c * prod over roots alpha of Q (with multiplicity) of (t - alpha^c).

    Power sums of the c-th powers are the (c*j)-th power sums of the roots,
    so Newton's identities carry the whole computation over the rationals.
    """
    if not Q:
        raise ValueError("zero polynomial has no roots to transform")
    if c < 1:
        raise ValueError("c must be a positive integer")
    s, lam = Q.degree, Q.lc
    if s == 0:
        return Poly([lam**c])
    monic = [v / lam for v in Q.coeffs]
    p = _power_sums(monic, s * c)
    pc = [Fraction(0)] + [p[j * c] for j in range(1, s + 1)]
    return Poly(_monic_from_power_sums(pc, s)).scale(lam**c)


def floor_exponent(n: int, c: int, d: int) -> int:
    """1 + floor((c+d) n / c): where the n-th coefficient lands under the transform."""
    return 1 + ((c + d) * n) // c


def floor_transform(g: RatFun, c: int, d: int) -> RatFun:
    """The rational function of ``sum a_n x^(1 + floor((c+d) n / c))`` for ``g = sum a_n x^n``.

    With Q = den(g), the product of Q(rho^k x) over the c-th roots of unity is
    sigma * U(x^c), U the root-power transform of Q; clearing it turns g into
    S(x) / V(x^c), and the exponent map is additive on multiples of c.
    """
    if c < 1 or d < 1:
        raise ValueError("c and d must be positive")
    if math.gcd(c, d) != 1:
        raise ValueError(f"c={c} and d={d} are not coprime")
    if not isinstance(g, RatFun):
        g = RatFun(g)
    P, Q = g.num, g.den
    u_tilde = root_power_transform(Q, c)
    sigma = -1 if ((c + 1) * Q.degree) % 2 else 1
    full = u_tilde.compose_power(c).scale(sigma)
    S = (P * full).exact_div(Q)
    N = S.map_exponents(lambda k: floor_exponent(k, c, d))
    D = u_tilde.compose_power(c + d).scale(sigma)
    return RatFun(N, D)


def floor_transform_series(coeffs: Sequence, c: int, d: int, order: int) -> list:
    """Definitional exponent map applied to a coefficient list, truncated at ``order``."""
    out = [0] * (order + 1)
    for n, a in enumerate(coeffs):
        e = floor_exponent(n, c, d)
        if e > order:
            break
        out[e] += a
    return out
