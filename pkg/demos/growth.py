"""Growth constants and how fast the normalized counts settle."""

import numpy as np

from qdecreasing import asymptotics

for q in ["1", "2", "1/2"]:
    print(q, float(asymptotics.phi(q)))

# words: the ratio [x^n]W / phi^n settles fast (simple pole)
w = asymptotics.growth_check("words", "1", 30, 60)
print(w.verdict, w.spread)

# coverings: a double pole, so [x^n]C / (n phi^n) drifts like alpha + beta/n
c = asymptotics.growth_check("coverings", "1", 30, 60)
print(c.verdict, c.spread)
r = np.array(c.ratios)
n = np.arange(30, 61)
beta, alpha = np.polyfit(1 / n, r, 1)
print("alpha ~", alpha, "beta ~", beta)

for lo, hi in [(30, 60), (60, 120), (120, 240)]:
    print(lo, hi, asymptotics.growth_check("coverings", "1", lo, hi).spread)

# prime intervals oscillate with period c+d; each residue class grows like phi^c
print(asymptotics.residue_growth("5/2", 150, 220))
