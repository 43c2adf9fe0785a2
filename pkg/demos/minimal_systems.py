"""
Minimal systems and their exchange moves
========================================

A minimal r-system is r disjoint chorded cycles using as few vertices as
possible.  Free vertices around it obey sharp degree constraints, which
the library exposes as checkable predicates.
"""

from chordpack.cycles import ChordedCycle
from chordpack.generators import extremal_g2
from chordpack.graph import Graph, complete, disjoint_union
from chordpack.packing import (
    RSystem,
    check_minimality,
    degree3_classify,
    exact_min_system,
    optimal_system,
    six_cycle_swap,
)

# Among minimum systems, the optimal one leaves the largest remainder component
two_k4 = disjoint_union(complete(4), complete(4)).with_edge(3, 4)
print("exact:", exact_min_system(two_k4, 1).metrics())
print("optimal on G2(2):", optimal_system(extremal_g2(2), 1).metrics())

# A chorded 6-cycle with one chord, and two free vertices that together see five of its vertices
edges = [(i, (i + 1) % 6) for i in range(6)] + [(0, 3), (6, 0), (6, 2), (6, 4), (7, 1), (7, 3)]
g = Graph.from_edges(8, edges)
c = ChordedCycle.from_sequence(g, range(6))
sys = RSystem((c,), g)
print("minimal:", check_minimality(g, sys))

# Vertex 6 sees every other cycle vertex, so its cycle is a triangle-free 6-cycle
print(degree3_classify(g, sys, c, 6))

# Trade one cycle vertex for each free vertex: both new sets still carry a chorded 6-cycle
res = six_cycle_swap(g, sys, c, 6, 7)
print("u' =", res.u_prime, "v' =", res.v_prime)
print("c_u", res.c_u.cycle, sorted(res.c_u.chords))
print("c_v", res.c_v.cycle, sorted(res.c_v.chords))
