"""Constructive chorded-cycle routes for 2-connected graphs.

Three routes are tried in turn: a triangle plus a detour around it, a
longest cycle with a good ear (where a handful of explicit rerouting
constructions produce a chorded cycle), and finally exhaustive search.
Every constructed cycle is validated against the host before it is
returned.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass

from .cycles import ChordedCycle, Cycle, find_chorded_cycle
from .errors import InvariantViolation, PreconditionViolated
from .graph import Graph, delta_2, induced
from .structure import (
    LONGEST_MAX_N,
    Ear,
    block_decomposition,
    good_ear,
    is_two_connected,
    longest_cycle,
    triangles,
)

__all__ = [
    "Found",
    "NotFound",
    "AllTriangleLeafBlocks",
    "chorded_from_triangle",
    "chorded_via_good_ear",
    "find_chorded_2connected",
    "leaf_block_analysis",
    "cycle_with_chords",
]


@dataclass(frozen=True)
class Found:
    cycle: ChordedCycle
    route: str = "exhaustive"


@dataclass(frozen=True)
class NotFound:
    pass


@dataclass(frozen=True)
class AllTriangleLeafBlocks:
    blocks: tuple[frozenset[int], ...]


def cycle_with_chords(g: Graph, seq: Sequence[int]) -> ChordedCycle | None:
    """``seq`` as a chorded cycle of ``g`` if it is a cycle with a chord, else ``None``."""
    cyc = Cycle(tuple(seq))
    if len(cyc) < 4 or not cyc.is_valid(g):
        return None
    if g.edges_within(cyc.mask) <= len(cyc):
        return None
    return ChordedCycle.from_sequence(g, seq)


def _bfs_path(g: Graph, source: int, targets: int, allowed: int, skip_edge=None) -> list[int] | None:
    """Shortest path from ``source`` to a vertex of ``targets`` using only ``allowed`` interior.

    Neighbours are scanned in increasing order, so the result is the
    lexicographically first shortest path.
    """
    if targets >> source & 1:
        return [source]
    parent = {source: None}
    queue = deque([source])
    rows = g.rows
    while queue:
        v = queue.popleft()
        for w in range(g.n):
            if not rows[v] >> w & 1 or w in parent:
                continue
            if skip_edge is not None and {v, w} == skip_edge:
                continue
            if targets >> w & 1:
                path = [w, v]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1]
            if allowed >> w & 1:
                parent[w] = v
                queue.append(w)
    return None


def chorded_from_triangle(g: Graph) -> ChordedCycle | None:
    """A chorded cycle grown from a triangle, or ``None`` when ``g`` is triangle-free.

    For a triangle ``abc`` and one of its edges ``xy``, a shortest ``x``-``y``
    path avoiding the third vertex and the edge ``xy`` closes with the third
    vertex into a cycle on which ``xy`` is a chord.
    """
    if g.n < 4 or not is_two_connected(g):
        raise PreconditionViolated("triangle route needs a 2-connected graph on at least 4 vertices")
    saw_triangle = False
    full = g.full_mask
    for a, b, c in triangles(g):
        saw_triangle = True
        for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
            path = _bfs_path(g, x, 1 << y, full & ~(1 << z) & ~(1 << y), skip_edge={x, y})
            if path is None or len(path) < 3:
                continue
            found = cycle_with_chords(g, path + [z])
            if found is not None:
                return found
    if saw_triangle:
        raise InvariantViolation("a triangle in a 2-connected graph gave no chorded cycle")
    return None


class _Frame:
    """A cycle relabelled so an ear runs from ``u[1]`` to ``u[k]`` (1-based) with ``I`` forward."""

    def __init__(self, cyc: Sequence[int], start: int, step: int, ear: Sequence[int]):
        t = len(cyc)
        self.t = t
        self.u = [None] + [cyc[(start + step * i) % t] for i in range(t)]
        self.pos = {v: i for i, v in enumerate(self.u) if i}
        self.ear = tuple(ear)
        self.k = self.pos[self.ear[-1]]
        self.v = self.ear[1:-1]

    def arc(self, i: int, j: int) -> list[int]:
        """C[u_i, u_j] forward along the frame, wrapping past u_t."""
        out = [self.u[i]]
        while i != j:
            i = i % self.t + 1
            out.append(self.u[i])
        return out

    def mask_of(self, verts) -> int:
        m = 0
        for x in verts:
            m |= 1 << x
        return m


def _frames(c: Cycle, e: Ear):
    cyc = c.vertices
    where = {v: i for i, v in enumerate(cyc)}
    a, b = e.ends
    for first, ear in ((a, e.path.vertices), (b, tuple(reversed(e.path.vertices)))):
        for step in (1, -1):
            yield _Frame(cyc, where[first], step, ear)


def _reroute_end(g: Graph, f: _Frame) -> list[list[int]]:
    """Case ``d(u_2) >= 3`` (or its mirror, handled by the mirrored frame)."""
    out = []
    u, k, t = f.u, f.k, f.t
    if k < 3:
        return out
    target = f.mask_of(f.arc(k, 1)) | f.mask_of(f.v)
    off_cycle = g.full_mask & ~f.mask_of(u[1:])
    for x in g.neighbors(u[2]):
        if x in (u[1], u[3]):
            continue
        q = _bfs_path(g, x, target, off_cycle & ~(1 << u[2]))
        if q is None:
            continue
        y = q[-1]
        j = f.pos.get(y)
        if j is None or not (k + 1 <= j <= t):
            continue
        seq = [u[1], *f.v, *reversed(f.arc(2, k)), *q, *f.arc(j, 1)[1:-1]]
        out.append(seq)
    return out


def _reroute_pair(g: Graph, f: _Frame) -> list[list[int]]:
    """Case of two consecutive degree-3 vertices ``u_i, u_{i+1}`` inside the ear span."""
    out = []
    u, k, t = f.u, f.k, f.t
    target = f.mask_of(f.arc(k, 1)) | f.mask_of(f.v)
    off_cycle = g.full_mask & ~f.mask_of(u[1:])
    for i in range(2, k - 1):
        xs = [x for x in g.neighbors(u[i]) if x not in (u[i - 1], u[i + 1])]
        zs = [x for x in g.neighbors(u[i + 1]) if x not in (u[i], u[i + 2])]
        for x in xs:
            q = _bfs_path(g, x, target, off_cycle & ~(1 << u[i]))
            if q is None or not (k + 1 <= f.pos.get(q[-1], 0) <= t):
                continue
            qm = f.mask_of(q)
            for z in zs:
                r = _bfs_path(g, z, target, off_cycle & ~(1 << u[i + 1]) & ~qm)
                if r is None or not (k + 1 <= f.pos.get(r[-1], 0) <= t):
                    continue
                i2, j2 = f.pos[q[-1]], f.pos[r[-1]]
                if f.mask_of(r[:-1]) & qm:
                    continue
                if j2 <= i2:
                    tail = f.arc(j2, i2)
                else:
                    tail = list(reversed(f.arc(i2, j2)))
                seq = [u[1], *f.v, *reversed(f.arc(i + 1, k)), *r[:-1], *tail, *reversed(q[:-1]),
                       *reversed(f.arc(2, i))]
                out.append(seq)
    return out


def _reroute_ear(g: Graph, f: _Frame) -> list[list[int]]:
    """Constructions through a degree-3 ear vertex (ears of one or two interior vertices)."""
    out = []
    u, k, t = f.u, f.k, f.t
    cyc_mask = f.mask_of(u[1:])
    off = g.full_mask & ~cyc_mask
    if len(f.v) == 1:
        v1 = f.v[0]
        for x in g.neighbors(v1):
            if x in (u[1], u[k]):
                continue
            q = _bfs_path(g, x, cyc_mask, off & ~(1 << v1))
            if q is None:
                continue
            j = f.pos.get(q[-1])
            if j is None or not (k + 1 <= j <= t):
                continue
            out.append([*f.arc(1, k), v1, *q, *f.arc(j, 1)[1:-1]])
    if len(f.v) == 2 and k == 4:
        v1, v2 = f.v
        for x in g.neighbors(v1):
            if x in (u[1], v2):
                continue
            q = _bfs_path(g, x, cyc_mask, off & ~(1 << v1) & ~(1 << v2))
            if q is None:
                continue
            j = f.pos.get(q[-1])
            if j is None:
                continue
            if 5 <= j <= t:
                out.append([v1, *q, *f.arc(j, 1)[1:], u[2], u[3], u[4], v2])
                continue
            if j != 4:
                continue
            qm = f.mask_of(q)
            for z in g.neighbors(v2):
                if z in (v1, u[4]):
                    continue
                r = _bfs_path(g, z, cyc_mask, off & ~(1 << v1) & ~(1 << v2) & ~qm)
                if r is None:
                    continue
                j2 = f.pos.get(r[-1])
                if j2 is None:
                    continue
                if 5 <= j2 <= t:
                    back = list(reversed(f.arc(4, j2)))[1:]
                    out.append([v2, *r, *back, u[3], u[2], u[1], v1])
                elif j2 == 1:
                    out.append([v1, *q, v2, *r])
    return out


def chorded_via_good_ear(g: Graph, c: Cycle, e: Ear, check_longest: bool = True) -> ChordedCycle | None:
    """Turn a longest cycle and one of its ears into a chorded cycle, if a construction applies."""
    if not c.is_valid(g):
        raise PreconditionViolated("c is not a cycle of g")
    cyc_mask = c.mask
    a, b = e.ends
    if not (cyc_mask >> a & 1 and cyc_mask >> b & 1) or a == b:
        raise PreconditionViolated("ear ends must be distinct cycle vertices")
    if any(cyc_mask >> v & 1 for v in e.interior) or not e.path.is_valid(g):
        raise PreconditionViolated("not an ear of c")
    if check_longest and g.n <= LONGEST_MAX_N:
        best = longest_cycle(g)
        if best is not None and len(best) > len(c):
            raise PreconditionViolated("c is not a longest cycle")
    if g.edges_within(cyc_mask) > len(c):
        return ChordedCycle.from_sequence(g, c.vertices)
    for f in _frames(c, e):
        candidates = _reroute_end(g, f) + _reroute_pair(g, f) + _reroute_ear(g, f)
        for seq in candidates:
            if len(set(seq)) != len(seq):
                continue
            found = cycle_with_chords(g, seq)
            if found is not None:
                found.validate(g)
                return found
    return None


def find_chorded_2connected(g: Graph) -> Found | NotFound:
    """Chorded cycle of a 2-connected graph by the triangle, good-ear and exhaustive routes."""
    if g.n < 4 or not is_two_connected(g):
        raise PreconditionViolated("need a 2-connected graph on at least 4 vertices")
    tri = chorded_from_triangle(g)
    if tri is not None:
        tri.validate(g)
        return Found(tri, "triangle")
    if g.n <= LONGEST_MAX_N:
        c = longest_cycle(g)
        if g.edges_within(c.mask) > len(c):
            return Found(ChordedCycle.from_sequence(g, c.vertices), "longest_cycle")
        t = len(c)
        size = min(t, t // 2 + 2)
        seen = set()
        for start in range(t):
            seg = tuple(c.vertices[(start + i) % t] for i in range(size))
            key = frozenset(seg)
            if key in seen:
                continue
            seen.add(key)
            ear = good_ear(g, c, seg)
            if ear is None:
                continue
            built = chorded_via_good_ear(g, c, ear, check_longest=False)
            if built is not None:
                return Found(built, "good_ear")
    found = find_chorded_cycle(g)
    if found is None:
        return NotFound()
    found.validate(g)
    return Found(found, "exhaustive")


def leaf_block_analysis(g: Graph) -> Found | AllTriangleLeafBlocks:
    """A chorded cycle from a leaf block of order at least four, or the list of triangle leaf blocks."""
    if g.n < 4 or not g.is_connected():
        raise PreconditionViolated("need a connected graph on at least 4 vertices")
    if not g.is_complete() and delta_2(g) < 4:
        raise PreconditionViolated("needs delta_2 >= 4 or a complete graph")
    if is_two_connected(g):
        res = find_chorded_2connected(g)
        if isinstance(res, NotFound):
            raise InvariantViolation("2-connected graph with delta_2 >= 4 has no chorded cycle")
        return res
    dec = block_decomposition(g)
    leaves = [dec.blocks[i] for i in dec.leaf_blocks]
    for block in leaves:
        if len(block) < 4:
            continue
        sub, mapping = induced(g, sorted(block))
        res = find_chorded_2connected(sub)
        if isinstance(res, Found):
            back = {new: old for old, new in mapping.items()}
            cyc = res.cycle.relabel(back)
            cyc.validate(g)
            return Found(cyc, res.route)
    if all(len(b) == 3 for b in leaves):
        return AllTriangleLeafBlocks(tuple(leaves))
    whole = find_chorded_cycle(g)
    if whole is None:
        raise InvariantViolation("leaf blocks are neither triangles nor hosts of a chorded cycle")
    return Found(whole, "exhaustive")
