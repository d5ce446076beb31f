"""Coverings and intervals: closed forms against brute force, and real q."""

import numpy as np

from qdecreasing import formulas, lattice

X = formulas.X

# C_1 as a rational function, and its first terms
C1 = formulas.gf_coverings("1")
print(C1)
print(C1.integer_series(12))

# same numbers from explicit lattices
print([lattice.count_coverings(lattice.build_lattice(n, "1")) for n in range(13)])

# irrational q goes through the defining sums (no closed form)
for q in ["sqrt2", "pi/4", "e"]:
    print(q, formulas.series_coverings_real(q, 12).coeffs)

# pi/4 sits just below 1, so early terms agree with q = 1 and then split
a = np.array(formulas.series_coverings_real("pi/4", 20).coeffs)
b = np.array(formulas.gf_coverings("1").integer_series(20))
print(b - a)

# intervals come from prime intervals through I = W / ((1-x)(1-P))
for q in ["1", "2/3", "3/2"]:
    I = formulas.gf_intervals(q)
    P = formulas.gf_prime_intervals(q)
    print(q, I.integer_series(10))
    print("  identity holds:", I * (1 - X) * (1 - P) == formulas.gf_words(q))

print(formulas.gf_prime_intervals("1"))
