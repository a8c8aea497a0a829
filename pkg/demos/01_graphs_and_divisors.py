#!/usr/bin/env python3
"""Tour of the basic objects: multigraphs, divisors, chip-firing equivalence.

A graph here is a finite connected multigraph without loop edges. A divisor
is an integer vector on its vertices, thought of as chips (possibly debts)
placed on the vertices. Two divisors are equivalent when one can be turned
into the other by lending moves: a vertex sends one chip along each of its
edges. Equality of classes is decided through a canonical representative.
"""

import chipfire as cf

print("=" * 66)
print("Graphs: parsing, families, invariants")
print("=" * 66)

# Edge-list text: one edge per line, parallel edges by repetition.
g = cf.parse_graph("""
# a triangle with a doubled edge
a b
a b
b c
c a
""")
print("parsed:", g)
print("vertices:", g.vertices)
print("genus |E| - |V| + 1 =", cf.genus(g))
print("degree of b:", g.degree("b"))
print()

# Named families used throughout: complete graphs and banana graphs.
k4 = cf.complete_graph(4)
b3 = cf.banana_graph(3)
print("complete(4):", k4, "genus", cf.genus(k4))
print("banana(3):  ", b3, "genus", cf.genus(b3))

# Subdividing every edge into k pieces preserves the genus.
sub, old_vertices = cf.subdivide(b3, 3)
print("banana(3) subdivided by 3:", sub, "genus", cf.genus(sub))
print()

print("=" * 66)
print("Divisors and the Laplacian")
print("=" * 66)

d = cf.Divisor(b3, {"Q1": 3, "Q2": -1})
print("D =", d, " degree:", d.degree, " effective:", d.is_effective())

# Lending from Q1 along all three parallel edges is a Laplacian image.
move = cf.laplacian_apply(b3, {"Q1": 1, "Q2": 0})
print("lending move from Q1:", move, " (degree", move.degree, ")")

shifted = d - move
print("D - move =", shifted)
print("equivalent to D?", cf.is_equivalent(b3, d, shifted))
print()

print("=" * 66)
print("q-reduced form: the canonical representative of a class")
print("=" * 66)

# Reduction concentrates debt at the chosen base vertex and leaves a
# stable configuration elsewhere; classes are equal iff reductions are.
messy = cf.Divisor(b3, {"Q1": -4, "Q2": 7})
reduced = cf.q_reduce(b3, messy, "Q1")
print("messy  :", messy)
print("reduced:", reduced)
print("idempotent?", cf.q_reduce(b3, reduced, "Q1") == reduced)
print("winnable (equivalent to an effective divisor)?", cf.is_winnable(b3, messy))
print()

# The canonical divisor has deg(v) - 2 chips at every vertex.
print("canonical divisor of complete(4):", cf.canonical_divisor(k4))
print("its degree equals 2g - 2 =", cf.canonical_divisor(k4).degree)
