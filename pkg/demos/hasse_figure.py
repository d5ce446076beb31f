"""The lattice W_5^1: counts, irreducibles, and a DOT file for graphviz."""

from qdecreasing import lattice

m = lattice.build_lattice(5, "1")
print(m.report())

print("join-irreducible:", lattice.join_irreducibles(m))
print("meet-irreducible:", lattice.meet_irreducibles(m))

# meet is bitwise AND; join folds AND over the common upper bounds
print(lattice.meet("10010", "11001", "1"))
print(lattice.join("10000", "00100", m))

# the lower covers of a word are read off its decomposition 1^m (0^a 1^b)* 0^l
for w in ["11111", "00011", "11001"]:
    print(w, lattice.lower_covers(w, "1"))

with open("W_5_1.dot", "w") as fh:
    fh.write(lattice.to_dot(m))
print("wrote W_5_1.dot  (render with: dot -Tpng W_5_1.dot -o W_5_1.png)")
