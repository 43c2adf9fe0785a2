"""Path and cycle value types plus the shortest-first chorded-cycle search.

Everything here works on vertex bitmasks.  Cycles are stored in a
canonical orientation: the smallest vertex first and the smaller of its
two cycle neighbours second.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import InvariantViolation
from .graph import EXACT_MAX_N, Graph, bits, require_exact, to_mask

__all__ = [
    "Path",
    "Cycle",
    "ChordedCycle",
    "canonical_cycle",
    "find_chorded_cycle",
    "chorded_cycles_of_length",
    "two_core",
]


@dataclass(frozen=True)
class Path:
    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def mask(self) -> int:
        return to_mask(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def is_valid(self, g: Graph) -> bool:
        seq = self.vertices
        if not seq or len(set(seq)) != len(seq):
            return False
        return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


@dataclass(frozen=True)
class Cycle:
    """A cycle given by its vertex sequence, implicitly closed."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def mask(self) -> int:
        return to_mask(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, i):
        return self.vertices[i]

    def cycle_edges(self) -> set[tuple[int, int]]:
        seq = self.vertices
        t = len(seq)
        return {tuple(sorted((seq[i], seq[(i + 1) % t]))) for i in range(t)}

    def is_valid(self, g: Graph) -> bool:
        seq = self.vertices
        t = len(seq)
        if t < 3 or len(set(seq)) != t:
            return False
        return all(g.has_edge(seq[i], seq[(i + 1) % t]) for i in range(t))

    def segment(self, i: int, j: int) -> tuple[int, ...]:
        """Vertices from position ``i`` forward to position ``j`` (wrapping)."""
        t = len(self.vertices)
        out = [self.vertices[i % t]]
        k = i % t
        while k != j % t:
            k = (k + 1) % t
            out.append(self.vertices[k])
        return tuple(out)


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate/reflect a cycle sequence into canonical orientation."""
    seq = list(seq)
    t = len(seq)
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if t > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


@dataclass(frozen=True)
class ChordedCycle:
    """A cycle of the host graph together with all of its chords."""

    cycle: tuple[int, ...]
    chords: frozenset[tuple[int, int]]

    @classmethod
    def from_sequence(cls, g: Graph, seq: Sequence[int]) -> ChordedCycle:
        """Build from a cycle sequence, collecting every chord present in ``g``.

        Raises :class:`InvariantViolation` if ``seq`` is not a cycle of ``g``
        or has no chord.
        """
        cyc = Cycle(canonical_cycle(seq))
        if not cyc.is_valid(g):
            raise InvariantViolation(f"{tuple(seq)} is not a cycle of the host graph")
        on = cyc.cycle_edges()
        mask = cyc.mask
        chords = frozenset(
            (u, v)
            for u in cyc.vertices
            for v in bits(g.rows[u] & mask)
            if u < v and (u, v) not in on
        )
        if not chords:
            raise InvariantViolation(f"cycle {cyc.vertices} has no chord")
        return cls(cyc.vertices, chords)

    @property
    def length(self) -> int:
        return len(self.cycle)

    @property
    def mask(self) -> int:
        return to_mask(self.cycle)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.cycle)

    def validate(self, g: Graph) -> None:
        cyc = Cycle(self.cycle)
        if not cyc.is_valid(g):
            raise InvariantViolation(f"{self.cycle} is not a cycle of the host graph")
        if len(self.cycle) < 4 or not self.chords:
            raise InvariantViolation(f"{self.cycle} carries no chord")
        on = cyc.cycle_edges()
        mask = cyc.mask
        for u, v in self.chords:
            if not (mask >> u & 1 and mask >> v & 1):
                raise InvariantViolation(f"chord {u}-{v} leaves the cycle")
            if not g.has_edge(u, v):
                raise InvariantViolation(f"chord {u}-{v} is not an edge")
            if tuple(sorted((u, v))) in on:
                raise InvariantViolation(f"chord {u}-{v} is a cycle edge")

    def relabel(self, mapping: dict[int, int]) -> ChordedCycle:
        """Map vertex ids (e.g. back from an induced subgraph)."""
        seq = canonical_cycle([mapping[v] for v in self.cycle])
        chords = frozenset(tuple(sorted((mapping[a], mapping[b]))) for a, b in self.chords)
        return ChordedCycle(seq, chords)

    def to_dict(self) -> dict:
        return {"cycle": list(self.cycle), "chords": sorted(list(c) for c in self.chords)}


def two_core(g: Graph, within: int) -> int:
    """Peel vertices of degree at most one inside ``<within>``."""
    mask = within
    rows = g.rows
    changed = True
    while changed:
        changed = False
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            if (rows[low.bit_length() - 1] & mask).bit_count() <= 1:
                mask ^= low
                changed = True
    return mask


def _bfs_dist(g: Graph, source: int, allowed: int) -> list[int]:
    """Distances from ``source`` through ``allowed``; unreachable is ``EXACT_MAX_N``."""
    dist = [EXACT_MAX_N] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    rows = g.rows
    d = 0
    while frontier:
        d += 1
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
        while nxt:
            low = nxt & -nxt
            dist[low.bit_length() - 1] = d
            nxt ^= low
    return dist


def _search_length(
    g: Graph, start: int, allowed: int, length: int, dist: list[int], accept
) -> list[int] | None:
    """Lexicographically first cycle of ``length`` vertices through ``start``.

    Only vertices of ``allowed`` (which must exclude ``start``) may be used;
    ``dist`` holds distances back to ``start``.  ``accept(mask)`` decides
    whether a closed cycle on ``mask`` counts.
    """
    rows = g.rows
    start_row = rows[start]
    failed: set[tuple[int, int]] = set()
    seq = [start]

    def dfs(v: int, mask: int, placed: int) -> bool:
        if placed == length:
            return bool(start_row >> v & 1) and accept(mask)
        key = (v, mask)
        if key in failed:
            return False
        slack = length - placed
        cand = rows[v] & allowed & ~mask
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            if dist[w] > slack:
                continue
            seq.append(w)
            if dfs(w, mask | low, placed + 1):
                return True
            seq.pop()
        failed.add(key)
        return False

    if dfs(start, 1 << start, 1):
        return seq
    return None


def _search_shortest(
    g: Graph, start: int, allowed: int, limit: int, dist: list[int], accept
) -> list[int] | None:
    """Shortest accepted cycle through ``start`` with fewer than ``limit`` vertices.

    Depth-first in lexicographic order with a shrinking bound, so among the
    shortest cycles the lexicographically first one is kept.
    """
    rows = g.rows
    start_row = rows[start]
    failed: set[tuple[int, int]] = set()
    seq = [start]
    best: list[int] | None = None
    bound = limit

    def dfs(v: int, mask: int, placed: int) -> bool:
        nonlocal best, bound
        improved = False
        if placed >= 4 and start_row >> v & 1 and accept(mask):
            best = list(seq)
            bound = placed
            return True
        key = (v, mask)
        if key in failed:
            return False
        cand = rows[v] & allowed & ~mask
        while cand:
            low = cand & -cand
            cand ^= low
            w = low.bit_length() - 1
            # w becomes vertex placed+1 and the cycle must stay below the bound
            if dist[w] > bound - placed - 1:
                continue
            seq.append(w)
            if dfs(w, mask | low, placed + 1):
                improved = True
            seq.pop()
        if not improved:
            failed.add(key)
        return improved

    dfs(start, 1 << start, 1)
    return best


def find_chorded_cycle(
    g: Graph, within: Iterable[int] | None = None, max_len: int | None = None
) -> ChordedCycle | None:
    """A minimum-length chorded cycle of ``<within>``, or ``None``.

    Cycles are searched by increasing length; among cycles of the minimum
    length the one with the lexicographically smallest canonical sequence
    is returned.

    >>> from chordpack.graph import complete
    >>> find_chorded_cycle(complete(4)).cycle
    (0, 1, 2, 3)
    """
    require_exact(g)
    mask = g.full_mask if within is None else to_mask(within)
    return _find_chorded_mask(g, mask, max_len)


_DEEPEN = 100


def _find_chorded_mask(g: Graph, mask: int, max_len: int | None = None) -> ChordedCycle | None:
    core = two_core(g, mask)
    top = core.bit_count()
    if max_len is not None:
        top = min(top, max_len)
    if top < 4 or all(g.edges_within(c) == c.bit_count() for c in g.component_masks(core)):
        return None
    edges_within = g.edges_within

    def accept(m: int) -> bool:
        return edges_within(m) > m.bit_count()

    starts = []
    for s in bits(core):
        allowed = core & ~((2 << s) - 1)
        if allowed.bit_count() < 3:
            break
        starts.append([s, allowed, None])
    # Short lengths by iterative deepening: dense graphs finish here.
    for length in range(4, min(top, _DEEPEN) + 1):
        for entry in starts:
            s, allowed, dist = entry
            if allowed.bit_count() + 1 < length:
                break
            if dist is None:
                dist = entry[2] = _bfs_dist(g, s, allowed)
            found = _search_length(g, s, allowed, length, dist, accept)
            if found is not None:
                return ChordedCycle.from_sequence(g, found)
    if top <= _DEEPEN:
        return None
    # Longer cycles: one bounded search per start vertex.
    best: list[int] | None = None
    limit = top + 1
    for entry in starts:
        s, allowed, dist = entry
        if allowed.bit_count() + 1 <= _DEEPEN:
            break
        if dist is None:
            dist = _bfs_dist(g, s, allowed)
        found = _search_shortest(g, s, allowed, limit, dist, accept)
        if found is not None:
            best, limit = found, len(found)
    return None if best is None else ChordedCycle.from_sequence(g, best)


def chorded_cycles_of_length(g: Graph, length: int, within: int | None = None):
    """Yield every chorded cycle of exactly ``length`` vertices (canonical form)."""
    mask = g.full_mask if within is None else within
    core = two_core(g, mask)
    rows = g.rows
    for s in bits(core):
        allowed = core & ~((2 << s) - 1)
        if allowed.bit_count() + 1 < length:
            break
        seq = [s]

        def dfs(v, m, placed):
            if placed == length:
                if rows[s] >> v & 1 and seq[1] < seq[-1] and g.edges_within(m) > length:
                    yield tuple(seq)
                return
            for w in bits(rows[v] & allowed & ~m):
                seq.append(w)
                yield from dfs(w, m | (1 << w), placed + 1)
                seq.pop()

        for found in dfs(s, 1 << s, 1):
            yield ChordedCycle.from_sequence(g, found)
