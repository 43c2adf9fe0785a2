"""
Sweeping random instances
=========================

Random graphs with delta_2 >= 8 are checked for two disjoint chorded
cycles, with the brute-force oracle as referee.
"""

from collections import Counter

from chordpack.generators import random_delta2_graph
from chordpack.graph6 import serialize_graph6
from chordpack.harness import sweep

# A seeded stream of graph6 lines, the same format the CLI reads
lines = [serialize_graph6(random_delta2_graph(12, 8, seed)) for seed in range(50)]

summary = sweep(lines, 2)
print("outcomes:", summary.counts)
print("clean:", summary.clean)

# Each outcome row names the packing strategy that produced the witness
print(Counter(row["packer"] for row in summary.outcomes))
