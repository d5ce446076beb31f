"""Meet-irreducible elements: factor classes, letter alphabet, transfer system.

A meet-irreducible word starting with 0 and ending with 1 is a product of
factors ``0^a 1^b`` with ``1 + floor(b/q) <= a <= 1 + floor((b+1)/q)``.
Those factors are sorted into disjoint letters, and meet-irreducibility
becomes avoidance of a finite set of two-letter patterns.  The count then
comes from the linear system ``M_l = l + (sum of allowed predecessors) * l``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gfcore import Poly, RatFun, poly_gcd
from .qparam import RationalQ, require_positive_rational

X = RatFun.x()


def _geom(k: int) -> Poly:
    return Poly([1]) - Poly.monomial(k)


@dataclass
class Alphabet:
    """Letters (name -> generating function) and forbidden consecutive pairs."""

    letters: dict[str, RatFun]
    forbidden: set[tuple[str, str]]
    tail_letters: tuple[str, ...]

    def allowed(self, prev: str, nxt: str) -> bool:
        return (prev, nxt) not in self.forbidden


def solve_transfer(alphabet: Alphabet) -> dict[str, RatFun]:
    """Generating functions M_l of nonempty pattern-avoiding words ending in l.

    The system is cleared to polynomial form with the common letter
    denominator and solved by fraction-free (Bareiss) elimination.
    """
    names = list(alphabet.letters)
    n = len(names)
    common = Poly([1])
    for f in alphabet.letters.values():
        common = (common * f.den).exact_div(poly_gcd(common, f.den))
    hat = {k: (f.num * common).exact_div(f.den) for k, f in alphabet.letters.items()}
    # row l:  common * M_l - hat_l * sum_{p allowed before l} M_p = hat_l
    mat = []
    for l in names:
        row = []
        for p in names:
            entry = common if p == l else Poly()
            if alphabet.allowed(p, l):
                entry = entry - hat[l]
            row.append(entry)
        row.append(hat[l])
        mat.append(row)
    prev = Poly([1])
    for k in range(n):
        piv = next((r for r in range(k, n) if mat[r][k]), None)
        if piv is None:
            raise ArithmeticError("singular transfer system")
        mat[k], mat[piv] = mat[piv], mat[k]
        for r in range(k + 1, n):
            for j in range(k + 1, n + 1):
                mat[r][j] = (mat[k][k] * mat[r][j] - mat[r][k] * mat[k][j]).exact_div(prev)
            mat[r][k] = Poly()
        prev = mat[k][k]
    sol: list[RatFun] = [RatFun(0)] * n
    for k in range(n - 1, -1, -1):
        acc = RatFun(mat[k][n])
        for j in range(k + 1, n):
            acc = acc - RatFun(mat[k][j]) * sol[j]
        sol[k] = acc / RatFun(mat[k][k])
    return dict(zip(names, sol))


def _ceil_q(q: RationalQ) -> int:
    return -(-q.c // q.d)


def factor_classes_high(q) -> dict:
    """Closed forms of A, B, C and D_1..D_{ceil(q)-1} for q > 1."""
    q = require_positive_rational(q)
    c, d = q.c, q.d
    if c <= d:
        raise ValueError("factor_classes_high needs q > 1")
    dinv = pow(d, -1, c)

    def rep(v):
        r = v % c
        return r if r else c

    den = _geom(c + d)
    a_reps = [rep(dinv * (c - d - 1 + i)) for i in range(1, d + 1)]
    A = RatFun(Poly.from_terms((1 + a + (a * d) // c, 1) for a in a_reps), den)
    B = RatFun(Poly.from_terms((2 + a + (a * d) // c, 1) for a in a_reps), den)
    C = RatFun(Poly.from_terms((i + (i * d) // c, 1) for i in range(2, c + 2)), den)
    D = []
    for i in range(1, _ceil_q(q)):
        bs = [rep(dinv * m - 1) for m in range(0, c - d * i)]
        D.append(RatFun(Poly.from_terms((1 + b + ((b + 1) * d) // c, 1) for b in bs), den))
    return {"A": A, "B": B, "C": C, "D": D}


def alphabet_high(q) -> Alphabet:
    """The 2*ceil(q) + 1 letters and ceil(q)^2 + 2*ceil(q) - 1 forbidden pairs, q > 1."""
    q = require_positive_rational(q)
    sets = factor_classes_high(q)
    A, B, C, D = sets["A"], sets["B"], sets["C"], sets["D"]
    K = _ceil_q(q)
    k2 = K - 2
    letters = {
        "a": A - X**K,
        "b": X**K,
        "d": B - D[K - 2],
        "e": D[K - 2],
    }
    # at K = 2 there is no 01^(K-2) factor and the chain D_1 <= B <= C has no f/g levels
    letters["c"] = C - B if K == 2 else C - D[0] - X ** (K - 1)
    for i in range(1, k2 + 1):
        letters[f"f{i}"] = X ** (1 + i)
    for i in range(1, k2):
        letters[f"g{i}"] = D[i - 1] - D[i] - X ** (K - 1 - i)
    if k2 >= 1:
        letters[f"g{k2}"] = D[k2 - 1] - B
    forbidden = {("c", "d"), ("c", "e"), ("d", "d"), ("d", "e"), ("e", "b"), ("e", "d"), ("e", "e")}
    for i in range(1, k2 + 1):
        f, g = f"f{i}", f"g{i}"
        forbidden |= {("d", f), ("e", f), (f, "d"), (f, "e"), (g, "d"), (g, "e")}
        forbidden |= {(g, f"f{j}") for j in range(1, i + 1)}
    for i in range(1, k2):
        forbidden |= {(f"f{i}", f"f{j}") for j in range(1, k2 - i + 1)}
    order = ["a", "b", "c", "d", "e"] + [f"f{i}" for i in range(1, k2 + 1)] + [
        f"g{i}" for i in range(1, k2 + 1)
    ]
    return Alphabet({k: letters[k] for k in order}, forbidden, ("a", "b"))


def factor_classes_low(q) -> dict:
    """A, B, C for 0 < q <= 1 (here B and C overlap, C inside B)."""
    q = require_positive_rational(q)
    c, d = q.c, q.d
    if c > d:
        raise ValueError("factor_classes_low needs q <= 1")
    f = d // c
    A = RatFun(Poly.from_terms((1 + i + (i * d) // c, 1) for i in range(1, c + 1)), _geom(c + d))
    B = X ** (2 + f) / (1 - X) - A
    C = A / X - X ** (1 + f)
    return {"A": A, "B": B, "C": C}


def alphabet_low(q) -> Alphabet:
    sets = factor_classes_low(q)
    letters = {"A": sets["A"], "B-C": sets["B"] - sets["C"], "C": sets["C"]}
    return Alphabet(letters, {("C", "B-C"), ("C", "C")}, ("A", "B-C"))


def meet_parts(q) -> tuple[RatFun, RatFun]:
    """(M_0, M_1): meet-irreducibles starting with 0, ending with 0 resp. 1."""
    q = require_positive_rational(q)
    if q.c > q.d:
        alpha = alphabet_high(q)
        zeros = X
    else:
        alpha = alphabet_low(q)
        f = q.d // q.c
        zeros = sum((X**k for k in range(2, f + 2)), X)
    M = solve_transfer(alpha)
    M1 = sum(M.values(), RatFun(0))
    M0 = (1 + sum((M[k] for k in alpha.tail_letters), RatFun(0))) * zeros
    return M0, M1


def gf_meet_transfer(q) -> RatFun:
    """Meet-irreducibles for any rational q > 0 through the transfer system."""
    M0, M1 = meet_parts(q)
    return (M0 + M1) / (1 - X)


def gf_meet_low(q) -> RatFun:
    """Closed form in terms of A for 0 < q <= 1."""
    q = require_positive_rational(q)
    if q.c > q.d:
        raise ValueError("gf_meet_low needs 0 < q <= 1")
    A = factor_classes_low(q)["A"]
    f = q.d // q.c
    num = X ** (2 + f) * (X - 1) * A - (X - 1) * A**2 + X**2
    den = (X - 1) * ((1 - A) * X ** (2 + f) + A * X ** (3 + f) + (X - 1) * (X + A - A**2))
    return num / den


def gf_meet_high(q) -> RatFun:
    q = require_positive_rational(q)
    if q.c <= q.d:
        raise ValueError("gf_meet_high needs q > 1")
    return gf_meet_transfer(q)


def gf_meet(q) -> RatFun:
    q = require_positive_rational(q)
    return gf_meet_low(q) if q.c <= q.d else gf_meet_high(q)


def pattern_count(q) -> int:
    K = _ceil_q(require_positive_rational(q))
    return K * K + 2 * K - 1


def letter_count(q) -> int:
    return 2 * _ceil_q(require_positive_rational(q)) + 1


def admissible_factor_gf(q) -> RatFun:
    """All factors 0^a 1^b with 1 + floor(b/q) <= a <= 1 + floor((b+1)/q)."""
    q = require_positive_rational(q)
    return X ** (2 + q.d // q.c) / (1 - X)


__all__ = [
    "Alphabet",
    "admissible_factor_gf",
    "alphabet_high",
    "alphabet_low",
    "factor_classes_high",
    "factor_classes_low",
    "gf_meet",
    "gf_meet_high",
    "gf_meet_low",
    "gf_meet_transfer",
    "letter_count",
    "meet_parts",
    "pattern_count",
    "solve_transfer",
]
