"""
Where the degree bound stops working
====================================

Two small families sit just below the neighbourhood-union bound.  The
first cannot hold s disjoint chorded cycles; the second can.
"""

from chordpack.generators import extremal_g1, extremal_g2
from chordpack.graph import delta_2
from chordpack.graph6 import serialize_graph6
from chordpack.oracle import oracle_pack_exists
from chordpack.packing import pack_chorded_cycles

# delta_2 is the smallest |N(u) | N(v)| over nonadjacent pairs
for s in (2, 3):
    g1, g2 = extremal_g1(s), extremal_g2(s)
    print(f"s={s}: G1 order {g1.n}, delta_2 {delta_2(g1)};  G2 order {g2.n}, delta_2 {delta_2(g2)}")

# The brute-force oracle settles G1 with no help from the packer
for s in (2, 3):
    exists, _ = oracle_pack_exists(extremal_g1(s), s)
    print(f"G1({s}) has {s} disjoint chorded cycles: {exists}")

# G2 packs; the witness lists each cycle and its chords
out = pack_chorded_cycles(extremal_g2(2), 2)
print(type(out).__name__, "via", out.strategy)
for c in out.system.cycles:
    print("  cycle", c.cycle, "chords", sorted(c.chords))

# graph6 strings are what the command line reads and writes
print(serialize_graph6(extremal_g1(2)), serialize_graph6(extremal_g2(2)))
