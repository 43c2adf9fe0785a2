"""Immutable simple graphs with bitmask adjacency rows.

Vertices are the integers ``0..n-1``.  Row ``u`` of a :class:`Graph` is an
``int`` whose bit ``v`` is set exactly when ``uv`` is an edge, so set
operations on neighbourhoods are single integer operations.  The exact
search routines elsewhere in the package assume ``n <= EXACT_MAX_N``.

Neighbourhood functionals follow the union convention throughout: for a
set ``S`` of vertices, ``N(S)`` is the union of the neighbourhoods of its
members, and ``d_H(S) = |N(S) & H|``.  For a pair this is the size of the
union, never the sum of the two degrees.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator

from .errors import CapacityExceeded, EmptyQuerySet, InvalidOrder

__all__ = [
    "EXACT_MAX_N",
    "INFINITE",
    "Graph",
    "bits",
    "to_mask",
    "require_exact",
    "complete",
    "cycle",
    "path",
    "empty",
    "star",
    "wheel",
    "petersen",
    "join",
    "disjoint_union",
    "induced",
    "neighborhood_union",
    "delta_m",
    "sigma_m",
    "delta_2",
    "min_degree",
    "restricted_degree",
    "is_independent",
]

#: Largest order accepted by the exact-search routines.
EXACT_MAX_N = 64

#: Value of ``delta_m``/``sigma_m`` when no independent ``m``-set exists.
INFINITE = math.inf


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """A simple undirected graph on ``0..n-1``.

    Instances are immutable and hashable; two graphs compare equal when
    they have the same order and the same edge set.

    Parameters
    ----------
    n : int
        Number of vertices.
    rows : sequence of int
        Adjacency bit rows, one per vertex.  Must be symmetric with all
        diagonal bits clear.
    """

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Iterable[int]):
        rows = tuple(int(r) for r in rows)
        if n < 0 or len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row {u} refers to a vertex outside 0..{n - 1}")
            if row >> u & 1:
                raise ValueError(f"self-loop at vertex {u}")
            for v in bits(row):
                if not rows[v] >> u & 1:
                    raise ValueError(f"adjacency is not symmetric at {u}-{v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._trusted(n, tuple(rows))

    @classmethod
    def _trusted(cls, n: int, rows: tuple[int, ...]) -> Graph:
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        object.__setattr__(g, "_hash", None)
        return g

    # -- basic queries -------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self.rows[u]))

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges_within(self, mask: int) -> int:
        """Number of edges of the subgraph induced by the vertex mask."""
        rows = self.rows
        total = 0
        rest = mask
        while rest:
            low = rest & -rest
            total += (rows[low.bit_length() - 1] & mask).bit_count()
            rest ^= low
        return total // 2

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(row | (1 << u) == full for u, row in enumerate(self.rows))

    def with_edge(self, u: int, v: int) -> Graph:
        """Return a copy of the graph with the edge ``uv`` added."""
        if u == v:
            raise ValueError("self-loop")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._trusted(self.n, tuple(rows))

    def component_masks(self, within: int | None = None) -> list[int]:
        """Vertex masks of the connected components of ``<within>``."""
        rest = self.full_mask if within is None else within
        comps = []
        while rest:
            seed = rest & -rest
            comp = seed
            frontier = seed
            while frontier:
                v = frontier.bit_length() - 1
                frontier ^= 1 << v
                new = self.rows[v] & rest & ~comp
                comp |= new
                frontier |= new
            comps.append(comp)
            rest &= ~comp
        comps.sort(key=lambda m: m & -m)
        return comps

    def is_connected(self, within: int | None = None) -> bool:
        mask = self.full_mask if within is None else within
        if mask == 0:
            return False
        return len(self.component_masks(mask)) == 1

    # -- dunder --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.rows)))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    def __len__(self) -> int:
        return self.n

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g


def require_exact(g: Graph, cap: int = EXACT_MAX_N) -> None:
    if g.n > cap:
        raise CapacityExceeded(f"order {g.n} exceeds the exact-search cap of {cap}")


# -- constructors -----------------------------------------------------------


def complete(n: int) -> Graph:
    if n < 0:
        raise InvalidOrder("order must be non-negative")
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full ^ (1 << u) for u in range(n)))


def empty(n: int) -> Graph:
    if n < 0:
        raise InvalidOrder("order must be non-negative")
    return Graph._trusted(n, (0,) * n)


def path(n: int) -> Graph:
    if n < 0:
        raise InvalidOrder("order must be non-negative")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidOrder(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def wheel(n: int) -> Graph:
    """Hub 0 joined to a rim cycle ``1..n-1``; ``n`` counts the hub."""
    if n < 4:
        raise InvalidOrder(f"a wheel needs at least 4 vertices, got {n}")
    rim = n - 1
    edges = [(0, i) for i in range(1, n)]
    edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return Graph.from_edges(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` on ``0..g.n-1`` followed by ``h`` shifted up by ``g.n``."""
    shift = g.n
    rows = g.rows + tuple(r << shift for r in h.rows)
    return Graph._trusted(g.n + h.n, rows)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts."""
    shift = g.n
    g_all = (1 << g.n) - 1
    h_all = ((1 << h.n) - 1) << shift
    rows = tuple(r | h_all for r in g.rows) + tuple((r << shift) | g_all for r in h.rows)
    return Graph._trusted(g.n + h.n, rows)


def induced(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on ``vertices``, relabelled to ``0..k-1``.

    Returns the subgraph together with the old-to-new vertex map.  The
    relabelling preserves the relative order of the kept vertices.
    """
    keep = sorted(set(vertices))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph of order {g.n}")
    mapping = {old: new for new, old in enumerate(keep)}
    mask = to_mask(keep)
    rows = []
    for old in keep:
        row = 0
        for w in bits(g.rows[old] & mask):
            row |= 1 << mapping[w]
        rows.append(row)
    return Graph._trusted(len(keep), tuple(rows)), mapping


# -- degree functionals -----------------------------------------------------


def _union_mask(g: Graph, mask: int) -> int:
    out = 0
    for v in bits(mask):
        out |= g.rows[v]
    return out


def neighborhood_union(g: Graph, vertices: Iterable[int]) -> frozenset[int]:
    """``N_G(S)``: every vertex adjacent to at least one member of ``S``.

    Members of ``S`` appear in the result when adjacent to another member.
    """
    return frozenset(bits(_union_mask(g, to_mask(vertices))))


def restricted_degree(g: Graph, within: Iterable[int], vertices: Iterable[int]) -> int:
    """``d_H(S) = |N_G(S) & H|`` with ``H = within``.

    >>> restricted_degree(complete(4), {2, 3}, {0, 1})
    2
    """
    s_mask = to_mask(vertices)
    if not s_mask:
        raise EmptyQuerySet("the query set S must be nonempty")
    return (_union_mask(g, s_mask) & to_mask(within)).bit_count()


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    mask = to_mask(vertices)
    return all(not (g.rows[v] & mask) for v in bits(mask))


def _independent_sets(g: Graph, m: int) -> Iterator[int]:
    """Masks of all independent sets of size ``m``."""

    def extend(chosen: int, allowed: int, need: int):
        if need == 0:
            yield chosen
            return
        while allowed.bit_count() >= need:
            low = allowed & -allowed
            v = low.bit_length() - 1
            allowed ^= low
            yield from extend(chosen | low, allowed & ~g.rows[v], need - 1)

    yield from extend(0, g.full_mask, m)


def delta_2(g: Graph) -> int | float:
    """Minimum ``|N(u) | N(v)|`` over nonadjacent pairs; ``INFINITE`` if none."""
    rows = g.rows
    best = INFINITE
    for u in range(g.n):
        ru = rows[u]
        for v in bits(~ru & g.full_mask & ~((2 << u) - 1)):
            size = (ru | rows[v]).bit_count()
            if size < best:
                best = size
    return best


def delta_m(g: Graph, m: int) -> int | float:
    """``min |N(S)|`` over independent ``S`` with ``|S| = m``."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    if m == 2:
        return delta_2(g)
    best = INFINITE
    for mask in _independent_sets(g, m):
        best = min(best, _union_mask(g, mask).bit_count())
    return best


def sigma_m(g: Graph, m: int) -> int | float:
    """``min sum(deg(u) for u in S)`` over independent ``S`` with ``|S| = m``."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    best = INFINITE
    for mask in _independent_sets(g, m):
        best = min(best, sum(g.rows[v].bit_count() for v in bits(mask)))
    return best


def min_degree(g: Graph) -> int | float:
    return min((r.bit_count() for r in g.rows), default=INFINITE)
