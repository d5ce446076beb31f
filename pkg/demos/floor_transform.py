"""The floor transform sum a_n x^(1 + floor((c+d)n/c)) without complex numbers."""

from qdecreasing.gfcore import (
    Poly,
    RatFun,
    floor_seq_gf,
    floor_transform,
    floor_transform_series,
    root_power_transform,
)

X = RatFun.x()

# floor((3n + 2)/5) as a rational generating function
f = floor_seq_gf(3, 5, 2)
print(f)
print(f.integer_series(15))
print([(3 * n + 2) // 5 for n in range(16)])

# roots of 1 - y - y^2 squared: the product over the square roots of unity
t = Poly.x()
print(root_power_transform(1 - t - t**2, 2))

# a geometric series pushed through the transform
g = 1 / (1 - 2 * X)
print(floor_transform(g, 2, 1))

# something less tidy, checked term by term against the definition
g = (1 + 3 * X - X**2) / (1 - X - 2 * X**3 + X**4)
for c, d in [(2, 1), (3, 2), (2, 5)]:
    h = floor_transform(g, c, d)
    ok = h.series(60) == floor_transform_series(g.series(60), c, d, 60)
    print(c, d, h.den.degree, ok)
