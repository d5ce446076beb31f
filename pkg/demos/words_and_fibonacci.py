"""Counting q-decreasing words, and where the q-bonacci numbers come from."""

import numpy as np

from qdecreasing import count_words, enumerate_words, gf_words, phi

# every word of length 4 for q = 1 and q = 1/2
print(enumerate_words(4, "1"))
print(enumerate_words(4, "1/2"))

# irrational q only ever asks for sign(q*a - b), decided by interval arithmetic
print(len(enumerate_words(3, "pi/2")))

# for integer q the counts are (q+1)-bonacci numbers
for q in ["1", "2", "3"]:
    print(q, [count_words(n, q) for n in range(12)])

# the closed form agrees with the counting DP
W = gf_words("3/2")
print(W)
print(W.integer_series(15))
print([count_words(n, "3/2") for n in range(16)])

# growth: successive ratios approach phi(q)
counts = np.array([count_words(n, "3/2") for n in range(40, 61)], dtype=float)
print(counts[1:] / counts[:-1])
print(float(phi("3/2")))

# phi(q) increases with q
qs = ["1/3", "1/2", "2/3", "1", "3/2", "2", "5/2", "3"]
print([round(float(phi(q)), 6) for q in qs])
