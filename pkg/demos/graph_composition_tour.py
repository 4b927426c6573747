"""Walk through the graph side: compositions, counting, projection, DOT files.

Run:  python3 demos/graph_composition_tour.py
Writes DOT renderings into demos/out/ (view with Graphviz: dot -Tpng ...).
"""

import os

from laddergraphs import (
    build_iteratively,
    count_matchings,
    enumerate_compositions,
    format_polynomial,
    graph_to_dot,
    make_vertex,
    multiply_monomials,
    project,
)
from laddergraphs.ladder import NormalPolynomial

left, right = make_vertex(2, 2), make_vertex(2, 1)
comps = enumerate_compositions(left, right)
print(f"Composing a (2,2) vertex with a (2,1) vertex: {len(comps)} compositions")
print(f"(2 gray spots x 2 white spots -> {count_matchings(2, 2)} partial matchings)\n")

for index, g in enumerate(comps):
    mono = project(g)
    print(f"  #{index}: {len(g.edges)} joined line(s), projects to ({mono.r},{mono.s})   {g}")

projected = NormalPolynomial((project(g), 1) for g in comps)
print("\nSumming the projections reproduces the closed-form product:")
print(f"  graph route:  {format_polynomial(projected)}")
print(f"  closed form:  {format_polynomial(multiply_monomials((2, 2), (2, 1)))}")

out_dir = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(out_dir, exist_ok=True)
for index, g in enumerate(comps):
    path = os.path.join(out_dir, f"composition_{index}.dot")
    with open(path, "w", encoding="ascii") as handle:
        handle.write(graph_to_dot(g, name=f"composition_{index}"))
print(f"\nWrote {len(comps)} DOT files to {out_dir}")

print("\nGraphs can also be grown step by step (r,s vertices, chosen matchings):")
chain = build_iteratively([(2, 1, 0), (2, 2, 2), (1, 1, 1)])
print(f"  chain result: {chain}")
mono = project(chain)
print(f"  projects to ({mono.r},{mono.s})")
