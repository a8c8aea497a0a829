#!/usr/bin/env python3
"""Pushing curve divisors down to a dual graph: the plane-quartic fixture.

The bundled fixture tabulates points of a genus-3 plane quartic over a
p-adic field together with the component of the special fiber each point
reduces to. Specialization is the coefficient pushforward; the curve-side
ranks are externally stated inputs, and the graph-side rank can only be
larger or equal. All four specialized hyperplane sections land in the
canonical class of the dual graph.
"""

import chipfire as cf

fixture = cf.load_fixture()
g = fixture.graph
k = cf.canonical_divisor(g)

print("dual graph vertices:", g.vertices)
print("genus:", cf.genus(g))
print("canonical divisor:", k)
print()

print("assignments (curve point -> vertex):")
for point, vertex in fixture.table.assignments.items():
    print(f"  {point:12s} -> {vertex}")
print()

print(f"{'name':9s} {'specialized':28s} {'deg':>3s} {'r_G':>3s} "
      f"{'stated':>6s} {'>=?':>4s} {'~K_G':>5s}")
for report, equivalent in cf.fixture_reports(fixture):
    print(
        f"{report.name:9s} {str(report.specialized.to_json_dict()):28s} "
        f"{report.specialized.degree:3d} {report.graph_rank:3d} "
        f"{str(report.stated_rank):>6s} {str(report.bound_holds):>4s} "
        f"{str(equivalent):>5s}"
    )
print()

print("graph-side conclusions reproduced from the fixture:")
print("  gonality of the dual graph:", cf.gonality(g))
print("  Weierstrass points:", list(cf.weierstrass_points(g)))
print("  rank of 3(Q1):", cf.rank(g, cf.Divisor(g, {"Q1": 3})))
