#!/usr/bin/env python3
"""Tour of the graph families: construction, orders, bipartiteness.

Every family is built from the same cylinder grid of ell layers; the
differences are which chords get added at the bottom and which universal
vertex gets added at the top.  Run:

    python3 demos/01_graph_families.py
"""

from sgcirc import (
    NEG,
    bm,
    bq_even,
    bq_odd,
    build_graph,
    cylinder,
    is_bipartite,
    mobius_ladder,
    mycielski_cycle,
    s_construction,
    write_sgf,
    to_dot,
)

print("=" * 72)
print("Cylinder grid: the shared skeleton")
print("=" * 72)
g = cylinder(3, 5)
print(f"cylinder(3, 5): {g.n} vertices, {g.m} edges "
      f"(3 layers x 5 columns, zigzag-joined, all edges negative)")
print(f"vertex 0 is {g.labels[0]}, vertex 14 is {g.labels[14]}")
print()

print("=" * 72)
print("Generalized Mycielski over an odd cycle")
print("=" * 72)
for ell, k, note in [(1, 1, "this is K_4"), (2, 2, "this is the 11-vertex Grotzsch graph")]:
    g = mycielski_cycle(ell, k)
    print(f"mycielski_cycle({ell}, {k}): {g.n} vertices, {g.m} edges -- {note}")
print()

print("=" * 72)
print("Signed bipartite quadrangulations")
print("=" * 72)
g = bq_odd(2, 1)
parts = is_bipartite(g)
pos = [e for e in g.edges if e.sign.symbol == "+"]
print(f"bq_odd(2, 1): {g.n} vertices; underlying graph is K_3,4 "
      f"(parts of sizes {len(parts[0])} and {len(parts[1])}),")
print(f"  with {len(pos)} positive edges forming a maximum matching")
g = bq_even(3, 2)
print(f"bq_even(3, 2): {g.n} vertices, all edges negative, "
      f"bipartite: {is_bipartite(g) is not None} (it has odd cycles)")
g = bm(2, 2)
print(f"bm(2, 2): {g.n} vertices (8 grid + 2 rungs + apex), "
      f"bipartite: {is_bipartite(g) is not None}")
print()

print("=" * 72)
print("The order claim behind both bipartite families")
print("=" * 72)
print("BQ(k, 2k-1) and BM(k-1, 2k) have 2k^2 - k + 1 vertices:")
for k in range(2, 7):
    a, b = bq_odd(k, k - 1).n, bm(k - 1, k).n
    print(f"  k={k}: bq_odd(k, k-1) -> {a:3d},  bm(k-1, k) -> {b:3d},  "
          f"2k^2-k+1 = {2 * k * k - k + 1}")
print()

print("=" * 72)
print("Moebius ladder and the S(G) gadget")
print("=" * 72)
g = mobius_ladder(2)
print(f"mobius_ladder(2): {g.n} vertices, {g.m} edges, 3-regular "
      f"(rim C_8 plus 4 antipodal chords)")
k3 = build_graph(3, [(0, 1, NEG), (1, 2, NEG), (0, 2, NEG)])
s = s_construction(k3)
print(f"s_construction(K_3): {s.n} vertices, {s.m} edges "
      f"(each edge becomes a negative 4-cycle; always bipartite)")
print()

print("SGF serialization of K_4 (write_sgf / read_sgf round-trip, byte-stable):")
print(write_sgf(mycielski_cycle(1, 1)), end="")
print()
print("DOT rendering marks negative edges solid and positive edges dashed:")
print("\n".join(to_dot(bq_odd(2, 1)).splitlines()[:4]) + "\n  ...")
