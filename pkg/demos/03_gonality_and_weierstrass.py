#!/usr/bin/env python3
"""Gonality, minimal-degree linear systems, Weierstrass points, gaps.

The gonality of a graph is the least degree of a divisor of rank one.
A vertex P is a Weierstrass point when g chips at P have rank at least 1.
The gap sequence of P collects the multiples k(P) where the rank stalls;
it always has exactly g members.
"""

import chipfire as cf

print("=" * 66)
print("Gonality")
print("=" * 66)

for n in range(3, 7):
    print(f"complete({n}): gonality {cf.gonality(cf.complete_graph(n))} (= n-1)")
for n in (3, 5, 8):
    print(f"banana({n}):  gonality {cf.gonality(cf.banana_graph(n))}")
print()

# The minimal degree carrying any prescribed rank, with a witness divisor.
k5 = cf.complete_graph(5)
for r in (1, 2, 3):
    w = cf.min_degree_grd(k5, r, cf.genus(k5) + r)
    print(f"complete(5): minimal degree with rank {r} is {w.degree}, "
          f"witness {w.divisor}")
print()

print("hyperelliptic (genus >= 2 with a degree-2 pencil):")
print("  banana(4):    ", cf.is_hyperelliptic(cf.banana_graph(4)))
print("  complete(5):  ", cf.is_hyperelliptic(cf.complete_graph(5)))
print()

print("=" * 66)
print("Weierstrass points")
print("=" * 66)

for name, g in (
    ("banana(5)", cf.banana_graph(5)),
    ("complete(4)", cf.complete_graph(4)),
    ("quartic dual graph", cf.load_fixture().graph),
):
    print(f"{name}: {list(cf.weierstrass_points(g)) or 'none'}")
print()

# Banana graphs have no Weierstrass points at all; the complete graph has
# nothing else. The quartic dual graph splits its vertices.
quartic = cf.load_fixture().graph
for v in quartic.vertices:
    gaps = cf.gap_sequence(quartic, v)
    tree_left = cf.is_residual_tree_vertex(quartic, v)
    print(f"vertex {v:3s} gaps {gaps}  residual-tree: {tree_left}")

print()
print("A vertex whose deletion leaves a tree is never a Weierstrass point;")
print("that is why P above has the plain gap sequence {1, ..., g}.")
