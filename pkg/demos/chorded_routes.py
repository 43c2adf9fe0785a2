"""
Finding a chorded cycle
=======================

A 2-connected graph is searched by a triangle route, then a longest
cycle with a good ear, and only then exhaustively.
"""

from chordpack.chorded import find_chorded_2connected, leaf_block_analysis
from chordpack.cycles import find_chorded_cycle
from chordpack.graph import Graph, complete, cycle, disjoint_union, petersen, wheel
from chordpack.twopath import TwoPathConfig, two_path_analyze

# Each result records which route produced it
for name, g in [("K4", complete(4)), ("wheel(6)", wheel(6)), ("Petersen", petersen()), ("C6", cycle(6))]:
    print(name, find_chorded_2connected(g))

# The exhaustive search always returns a shortest chorded cycle
print("shortest in Petersen:", find_chorded_cycle(petersen()).length)

# A theta graph is 2-connected yet chord-free everywhere
theta = Graph.from_edges(10, [(i, (i + 1) % 8) for i in range(8)] + [(0, 8), (8, 9), (9, 4)])
print("theta:", find_chorded_2connected(theta))

# Two paths joined by a few cross edges: few edges, a named exception, or a chorded cycle
print(two_path_analyze(TwoPathConfig(5, 5, {(1, 1)})))
print(two_path_analyze(TwoPathConfig(3, 2, {(1, 1), (3, 1), (2, 2)})))
print(two_path_analyze(TwoPathConfig(3, 3, {(1, 1), (2, 2), (3, 3), (1, 3), (3, 1)})))

# Leaf blocks of order four or more carry the cycle when the graph is not 2-connected
g = disjoint_union(complete(5), complete(2)).with_edge(4, 5).with_edge(4, 6)
print(leaf_block_analysis(g))
