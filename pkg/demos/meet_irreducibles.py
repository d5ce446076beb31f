"""Meet-irreducible words as pattern-avoiding words over a small alphabet."""

from qdecreasing import meet
from qdecreasing.lattice import build_lattice, meet_irreducibles

# q = 5/2: seven letters, fourteen forbidden consecutive pairs
alpha = meet.alphabet_high("5/2")
for name, f in alpha.letters.items():
    print(name, f.integer_series(12))
print(sorted(a + b for a, b in alpha.forbidden))

M = meet.gf_meet_high("5/2")
print(M)
print(M.integer_series(12))
print([len(meet_irreducibles(build_lattice(n, "5/2"))) for n in range(1, 13)])

# letters and patterns grow with ceil(q)
for q in ["3/2", "5/2", "7/2", "9/2"]:
    print(q, meet.letter_count(q), meet.pattern_count(q))

# for q <= 1 three letters suffice
for q in ["1", "1/2", "2/3"]:
    print(q, meet.gf_meet_low(q).integer_series(12))
