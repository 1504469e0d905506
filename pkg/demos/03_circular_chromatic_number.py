#!/usr/bin/env python3
"""Exact circular chromatic numbers of signed graphs, with certificates.

chi_c scans an ascending grid of candidate circumferences p/q (p even,
q <= q_max) and returns the first colorable one together with a
certificate and the list of refuted candidates below it.  Everything is
integer arithmetic on Z_p.  Run:

    python3 demos/03_circular_chromatic_number.py

The flagship chi_c = 4 instances (Grotzsch graph, BQ(3,4), BM(2,4),
...) take seconds to half a minute each; they live in
tests/test_acceptance.py.  This demo keeps to instances that finish
instantly.
"""

import time
from fractions import Fraction

from sgcirc import (
    NEG,
    PQ,
    bipartite_four_coloring,
    bq_odd,
    build_graph,
    chi_c,
    decide_colorable,
    s_construction,
    verify_coloring,
)

def cycle(n):
    return build_graph(n, [(i, (i + 1) % n, NEG) for i in range(n)])

print("=" * 72)
print("Warm-up: classic values")
print("=" * 72)
k2 = build_graph(2, [(0, 1, NEG)])
print(f"chi_c(K_2, -)  = {chi_c(k2).value}   (two antipodal points)")
print(f"chi_c(C_5, -)  = {chi_c(cycle(5)).value}  (odd cycle: 2 + 1/k)")
k4 = build_graph(4, [(u, v, NEG) for u in range(4) for v in range(u + 1, 4)])
print(f"chi_c(K_4, -)  = {chi_c(k4, upper=Fraction(4)).value}")
print()

print("=" * 72)
print("A coloring is a point assignment on Z_p")
print("=" * 72)
pq = PQ(10, 4)  # circumference 5/2, threshold 4 units
coloring = decide_colorable(cycle(5), pq)
print(f"C_5 at p/q = {pq.p}/{pq.q} (r = {pq.r}): assign = {coloring.assign}")
print(f"verify_coloring: {verify_coloring(cycle(5), coloring)}")
print()

print("=" * 72)
print("Signed bipartite graphs never need more than 4")
print("=" * 72)
g = bq_odd(2, 1)
witness = bipartite_four_coloring(g)
print(f"bq_odd(2, 1): parts -> circle points 0 and 1 on O_4; "
      f"verifies: {verify_coloring(g, witness)}")
start = time.time()
result = chi_c(g, q_max=g.n, upper=Fraction(4))
print(f"full scan: chi_c = {result.value} with {len(result.refuted)} candidates "
      f"below 4 refuted ({time.time() - start:.2f}s)")
print()

print("=" * 72)
print("The edge-to-negative-4-cycle gadget shifts chi_c predictably")
print("=" * 72)
print("chi_c(S(G)) = 4 - 4/(chi_c(G) + 1):")
for name, g, expect in [("K_2", k2, "8/3"), ("K_3", cycle(3), "3"),
                        ("C_5", cycle(5), "20/7")]:
    s = s_construction(g)
    value = chi_c(s, q_max=7).value
    print(f"  chi_c(S({name})) = {value}   (expected {expect})")
