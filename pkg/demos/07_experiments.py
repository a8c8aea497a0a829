#!/usr/bin/env python3
"""Seeded random sweeps of the open questions, with replayable records.

Three desk-scale experiments: existence of low-degree divisors of given
rank whenever the count g - (r+1)(g-d+r) is nonnegative, the gonality
bound floor((g+3)/2), and invariance of minimal degrees under edge
subdivision. Rank invariance under subdivision is a theorem and asserts
hard; the others are open, so a counterexample would be recorded as a
finding rather than crashing the sweep.
"""

import json
import tempfile
from pathlib import Path

import chipfire as cf

print("=" * 66)
print("Random instances")
print("=" * 66)

g = cf.random_multigraph(6, 4, seed=7)
print("random_multigraph(6 vertices, genus 4, seed 7):")
print(cf.serialize_graph(g))

print("=" * 66)
print("Existence sweep (rank r in degree <= threshold)")
print("=" * 66)

result = cf.bn_existence_sweep(gmax=5, rmax=2, seed_count=10, seed=0)
for record in result.records[:5]:
    entries = ", ".join(
        f"r={e['r']}: d<={e['d_threshold']} found={e['found']}"
        for e in record.result["per_rank"]
    )
    print(f"seed {record.seed}: genus {record.result['genus']}  {entries}")
print(f"... {len(result.records)} records, {len(result.findings)} findings")
print()

print("=" * 66)
print("Gonality bound sweep")
print("=" * 66)

result = cf.gonality_bound_sweep(gmax=5, seed_count=20, seed=100)
print("max gonality seen per genus:",
      result.summary["max_gonality_per_genus"])
print("families meeting the bound exactly:")
for row in result.summary["family_witnesses"]:
    print(f"  {row['graph']:12s} genus {row['genus']}  gonality {row['gonality']}")
print()

print("=" * 66)
print("Subdivision sweep with JSONL records and replay")
print("=" * 66)

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "subdivision.jsonl"
    result = cf.subdivision_invariance_sweep(
        kmax=3, seed_count=5, seed=42, gmax=4, nmax=5, out=str(out)
    )
    print(f"{len(result.records)} records appended to {out.name}")
    line = json.loads(out.read_text().splitlines()[0])
    print("first record keys:", sorted(line))
    rows = cf.replay_records(str(out))
    print("replay matches:", all(ok for _, ok, _ in rows))
