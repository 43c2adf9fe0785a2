"""Extremal graphs and seeded random instances.

Random generation uses xorshift64* seeded through splitmix64, so a given
seed yields the same graphs in any language that implements the two
generators:

* splitmix64: ``z += 0x9E3779B97F4A7C15``, then ``z ^= z >> 30; z *=
  0xBF58476D1CE4E5B9; z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31``.
* xorshift64*: ``x ^= x >> 12; x ^= x << 25; x ^= x >> 27``, output
  ``x * 0x2545F4914F6CDD1D`` (all mod ``2**64``).
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

import numpy as np

from .errors import Infeasible, InvalidOrder, InvalidS, InvariantViolation
from .graph import Graph, complete, delta_2, disjoint_union, empty, join

__all__ = [
    "FamilyParams",
    "Xorshift64Star",
    "extremal_g1",
    "extremal_g2",
    "random_graph",
    "random_delta2_graph",
    "labeled_graph_codes",
    "graph_from_code",
    "adjacency_rows",
    "iter_graphs",
]

_MASK64 = (1 << 64) - 1


def splitmix64(z: int) -> tuple[int, int]:
    """One splitmix64 step: returns ``(new_state, output)``."""
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    x = z
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z, x ^ (x >> 31)


class Xorshift64Star:
    """Small deterministic PRNG.

    >>> a, b = Xorshift64Star(7), Xorshift64Star(7)
    >>> [a.next_u64() for _ in range(3)] == [b.next_u64() for _ in range(3)]
    True
    """

    def __init__(self, seed: int):
        _, state = splitmix64(seed & _MASK64)
        self.state = state or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK64

    def random(self) -> float:
        """Uniform float in ``[0, 1)`` from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, k: int) -> int:
        """Uniform integer in ``[0, k)`` by rejection."""
        if k <= 0:
            raise ValueError("k must be positive")
        limit = (1 << 64) - (1 << 64) % k
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k

    def choice(self, seq):
        return seq[self.below(len(seq))]


@dataclass(frozen=True)
class FamilyParams:
    family: str
    s: int

    def __post_init__(self):
        if self.family not in ("G1", "G2"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.s < (2 if self.family == "G1" else 1):
            raise InvalidS(f"{self.family} needs a larger s, got {self.s}")

    @property
    def cliques(self) -> tuple[int, ...]:
        """Orders of the cliques making up the graph."""
        s = self.s
        if self.family == "G2":
            return (4 * s,)
        return (2 * s + 1, 2 * s - 3) if s % 2 == 0 else (2 * s - 1, 2 * s - 1)

    def build(self) -> Graph:
        return extremal_g1(self.s) if self.family == "G1" else extremal_g2(self.s)


def extremal_g1(s: int) -> Graph:
    """Two cliques joined to an independent pair; order ``4s`` and ``delta_2 = 4s - 2``.

    Even ``s`` uses cliques of orders ``2s+1`` and ``2s-3``, odd ``s`` two of
    order ``2s-1``.  Clique vertices come first, the pair last.

    >>> g = extremal_g1(2)
    >>> g.n, delta_2(g)
    (8, 6)
    """
    if s < 2:
        raise InvalidS(f"G1 needs s >= 2, got {s}")
    if s % 2 == 0:
        h = disjoint_union(complete(2 * s + 1), complete(2 * s - 3))
    else:
        h = disjoint_union(complete(2 * s - 1), complete(2 * s - 1))
    g = join(h, empty(2))
    if delta_2(g) != 4 * s - 2:
        raise InvariantViolation(f"delta_2(G1({s})) = {delta_2(g)}")
    return g


def extremal_g2(s: int) -> Graph:
    """``K_{4s}`` plus a vertex adjacent to both ends of the edge ``01``.

    >>> g = extremal_g2(2)
    >>> g.n, delta_2(g)
    (9, 7)
    """
    if s < 1:
        raise InvalidS(f"G2 needs s >= 1, got {s}")
    k = 4 * s
    rows = list(complete(k).rows) + [0b11]
    rows[0] |= 1 << k
    rows[1] |= 1 << k
    g = Graph(k + 1, rows)
    if delta_2(g) != 4 * s - 1:
        raise InvariantViolation(f"delta_2(G2({s})) = {delta_2(g)}")
    return g


def random_graph(n: int, p: float, seed: int) -> Graph:
    """``G(n, p)``: pairs ``(i, j)`` with ``i < j`` tested in lexicographic order."""
    if n < 0:
        raise InvalidOrder("order must be non-negative")
    rng = Xorshift64Star(seed)
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph._trusted(n, tuple(rows))


def _violations(rows: list[int], n: int, t: int) -> list[tuple[int, int]]:
    out = []
    for u in range(n):
        for v in range(u + 1, n):
            if not rows[u] >> v & 1 and ((rows[u] | rows[v]).bit_count()) < t:
                out.append((u, v))
    return out


def random_delta2_graph(
    n: int, t: int, seed: int, density: float | None = None, allow_complete: bool = True
) -> Graph:
    """A random graph with ``delta_2 >= t``.

    Starts from ``G(n, density)`` (density drawn from the seed when not
    given) and, while some nonadjacent pair ``u, v`` has fewer than ``t``
    neighbours in total, adds a random edge from ``u`` or ``v`` to a vertex
    outside ``N(u) | N(v)``, or ``uv`` itself.  The result may be complete.

    A non-complete graph has ``delta_2 <= n - 2``; asking for more raises
    :class:`Infeasible` unless ``allow_complete``, in which case ``K_n`` is
    returned.
    """
    if n < 2:
        raise InvalidOrder(f"need n >= 2, got {n}")
    if t > n - 2:
        if allow_complete:
            return complete(n)
        raise Infeasible(f"delta_2 >= {t} forces a complete graph on {n} vertices")
    rng = Xorshift64Star(seed)
    if density is None:
        density = 0.5 * rng.random()
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < density:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    while True:
        bad = _violations(rows, n, t)
        if not bad:
            break
        u, v = bad[rng.below(len(bad))]
        cover = rows[u] | rows[v] | (1 << u) | (1 << v)
        options = [(u, v)]
        for w in range(n):
            if not cover >> w & 1:
                options.append((u, w))
                options.append((v, w))
        a, b = rng.choice(options)
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    g = Graph._trusted(n, tuple(rows))
    if not g.is_complete() and delta_2(g) < t:
        raise InvariantViolation("repair loop ended below the requested bound")
    return g


def labeled_graph_codes(n: int) -> np.ndarray:
    """Every labeled graph on ``n`` vertices as an integer code over the upper-triangle pairs."""
    pairs = n * (n - 1) // 2
    if pairs > 28:
        raise InvalidOrder(f"labeled enumeration is limited to n <= 8, got {n}")
    return np.arange(1 << pairs, dtype=np.int64)


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def graph_from_code(n: int, code: int) -> Graph:
    """The graph whose pair ``k`` (lexicographic upper triangle) is present iff bit ``k`` is set."""
    rows = [0] * n
    for k, (i, j) in enumerate(_pairs(n)):
        if code >> k & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph._trusted(n, tuple(rows))


def adjacency_rows(n: int, codes: np.ndarray) -> list[np.ndarray]:
    """Vectorised adjacency rows (as vertex bitmasks) for an array of graph codes."""
    rows = [np.zeros(codes.shape[0], dtype=np.int64) for _ in range(n)]
    for k, (i, j) in enumerate(_pairs(n)):
        present = (codes >> k) & 1
        rows[i] |= present << j
        rows[j] |= present << i
    return rows


def iter_graphs(n: int, codes: np.ndarray) -> Iterator[Graph]:
    for code in codes:
        yield graph_from_code(n, int(code))
