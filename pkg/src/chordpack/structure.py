"""Connectivity, blocks, longest paths and cycles, and ears of a cycle."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import networkx as nx

from .cycles import Cycle, Path
from .errors import CapacityExceeded, Disconnected, InvalidSegment, PreconditionViolated
from .graph import Graph, bits, to_mask

__all__ = [
    "LONGEST_MAX_N",
    "BlockDecomposition",
    "Ear",
    "SmallQ",
    "PendantTail",
    "RemovableVertex",
    "block_decomposition",
    "is_two_connected",
    "is_cut_vertex",
    "longest_path",
    "longest_cycle",
    "find_triangle",
    "triangles",
    "segment_order",
    "good_ear",
    "ears_in_segment",
    "no_ham_path_trichotomy",
    "has_hamiltonian_path",
    "v2_violations",
    "degree2_violations",
]

LONGEST_MAX_N = 20


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    leaf_blocks: tuple[int, ...]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Blocks (sorted by their sorted vertex tuples), cut vertices and leaf blocks."""
    if g.n == 0 or not g.is_connected():
        raise Disconnected("block decomposition needs a connected graph")
    if g.n == 1:
        return BlockDecomposition((frozenset({0}),), frozenset(), ())
    nxg = g.to_networkx()
    blocks = sorted((frozenset(b) for b in nx.biconnected_components(nxg)), key=sorted)
    cuts = frozenset(nx.articulation_points(nxg))
    leaves: tuple[int, ...] = ()
    if len(blocks) > 1:
        leaves = tuple(i for i, b in enumerate(blocks) if len(b & cuts) == 1)
    return BlockDecomposition(tuple(blocks), cuts, leaves)


def is_cut_vertex(g: Graph, v: int, within: int | None = None) -> bool:
    """Whether removing ``v`` increases the number of components of ``<within>``."""
    mask = g.full_mask if within is None else within
    before = len(g.component_masks(mask))
    after = len(g.component_masks(mask & ~(1 << v)))
    return after > before


def is_two_connected(g: Graph) -> bool:
    """At least three vertices, connected, and no cut vertex."""
    n = g.n
    if n < 3 or not g.is_connected():
        return False
    full = g.full_mask
    for v in range(n):
        rest = full & ~(1 << v)
        if len(g.component_masks(rest)) != 1:
            return False
    return True


def _cap(mask: int, cap: int) -> None:
    if mask.bit_count() > cap:
        raise CapacityExceeded(f"exact search capped at {cap} vertices, got {mask.bit_count()}")


def _path_with(g: Graph, within: int, size: int) -> list[int] | None:
    """Lexicographically least path on exactly ``size`` vertices of ``<within>``."""
    rows = g.rows
    failed: set[tuple[int, int]] = set()
    seq: list[int] = []

    def dfs(v: int, mask: int, placed: int) -> bool:
        if placed == size:
            return True
        key = (v, mask)
        if key in failed:
            return False
        cand = rows[v] & within & ~mask
        while cand:
            low = cand & -cand
            cand ^= low
            seq.append(low.bit_length() - 1)
            if dfs(seq[-1], mask | low, placed + 1):
                return True
            seq.pop()
        failed.add(key)
        return False

    for s in bits(within):
        seq = [s]
        if dfs(s, 1 << s, 1):
            return seq
    return None


def longest_path(g: Graph, within: Iterable[int] | None = None, cap: int = LONGEST_MAX_N) -> Path:
    """A longest path of ``<within>``, lexicographically least among the longest.

    >>> from chordpack.graph import star
    >>> longest_path(star(3)).vertices
    (1, 0, 2)
    """
    mask = g.full_mask if within is None else to_mask(within)
    if not mask:
        raise ValueError("longest_path needs a nonempty vertex set")
    _cap(mask, cap)
    top = max(c.bit_count() for c in g.component_masks(mask))
    for size in range(top, 0, -1):
        found = _path_with(g, mask, size)
        if found is not None:
            return Path(tuple(found))
    raise AssertionError("unreachable: a single vertex is a path")


def has_hamiltonian_path(g: Graph, within: Iterable[int] | None = None, cap: int = LONGEST_MAX_N) -> bool:
    mask = g.full_mask if within is None else to_mask(within)
    _cap(mask, cap)
    if not g.is_connected(mask):
        return False
    return _path_with(g, mask, mask.bit_count()) is not None


def _cycle_with(g: Graph, within: int, size: int) -> list[int] | None:
    rows = g.rows
    for s in bits(within):
        allowed = within & ~((2 << s) - 1)
        if allowed.bit_count() + 1 < size:
            return None
        failed: set[tuple[int, int]] = set()
        seq = [s]

        def dfs(v: int, mask: int, placed: int) -> bool:
            if placed == size:
                return bool(rows[v] >> s & 1)
            key = (v, mask)
            if key in failed:
                return False
            cand = rows[v] & allowed & ~mask
            while cand:
                low = cand & -cand
                cand ^= low
                seq.append(low.bit_length() - 1)
                if dfs(seq[-1], mask | low, placed + 1):
                    return True
                seq.pop()
            failed.add(key)
            return False

        if dfs(s, 1 << s, 1):
            return seq
    return None


def longest_cycle(g: Graph, within: Iterable[int] | None = None, cap: int = LONGEST_MAX_N) -> Cycle | None:
    """A longest cycle of ``<within>`` in canonical orientation, or ``None`` for a forest."""
    mask = g.full_mask if within is None else to_mask(within)
    _cap(mask, cap)
    for size in range(mask.bit_count(), 2, -1):
        found = _cycle_with(g, mask, size)
        if found is not None:
            return Cycle(tuple(found))
    return None


def triangles(g: Graph):
    """Yield triangles ``(a, b, c)`` with ``a < b < c`` in lexicographic order."""
    rows = g.rows
    for a in range(g.n):
        for b in bits(rows[a] >> (a + 1) << (a + 1)):
            common = rows[a] & rows[b] & ~((2 << b) - 1)
            for c in bits(common):
                yield (a, b, c)


def find_triangle(g: Graph) -> Cycle | None:
    for tri in triangles(g):
        return Cycle(tri)
    return None


@dataclass(frozen=True)
class Ear:
    """An ear of a reference cycle: a path whose ends lie on it and interior avoids it."""

    path: Path

    @property
    def ends(self) -> tuple[int, int]:
        return self.path.vertices[0], self.path.vertices[-1]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.path.vertices[1:-1]

    @property
    def length(self) -> int:
        return self.path.length


def segment_order(c: Cycle, segment: Iterable[int]) -> tuple[int, ...]:
    """Order the vertices of ``segment`` along ``c``; raise if they do not form a path on it.

    An ordered sequence is accepted as given when consecutive entries are
    cycle-consecutive; a set is arranged as the unique arc it spans.
    """
    seq = tuple(segment)
    t = len(c)
    pos = {v: i for i, v in enumerate(c.vertices)}
    if not seq or len(set(seq)) != len(seq) or any(v not in pos for v in seq):
        raise InvalidSegment("segment must be distinct cycle vertices")
    if len(seq) == 1:
        return seq
    steps = [(pos[b] - pos[a]) % t for a, b in zip(seq, seq[1:])]
    if all(s == 1 for s in steps) or all(s == t - 1 for s in steps):
        return seq
    members = set(seq)
    if len(members) == t:
        raise InvalidSegment("a whole cycle needs an explicit ordering")
    for i in range(t):
        if c.vertices[i] in members and c.vertices[i - 1] not in members:
            arc = [c.vertices[(i + k) % t] for k in range(len(members))]
            if set(arc) == members:
                return tuple(arc)
            break
    raise InvalidSegment("vertices do not form a path on the cycle")


def _ears_between(g: Graph, a: int, b: int, off: int) -> list[tuple[int, ...]]:
    """All paths from ``a`` to ``b`` of length at least two through ``off``."""
    rows = g.rows
    out: list[tuple[int, ...]] = []
    seq = [a]

    def dfs(v: int, used: int) -> None:
        if rows[v] >> b & 1 and len(seq) >= 2:
            out.append(tuple(seq) + (b,))
        cand = rows[v] & off & ~used
        while cand:
            low = cand & -cand
            cand ^= low
            seq.append(low.bit_length() - 1)
            dfs(seq[-1], used | low)
            seq.pop()

    dfs(a, 1 << a)
    return out


def ears_in_segment(g: Graph, c: Cycle, segment: Iterable[int]) -> list[tuple[int, ...]]:
    """Every ear of ``c`` with both ends in the segment, oriented from the smaller end."""
    order = segment_order(c, segment)
    on_cycle = c.cycle_edges()
    off = g.full_mask & ~c.mask
    ears = []
    for i, a in enumerate(order):
        for b in order[i + 1:]:
            lo, hi = min(a, b), max(a, b)
            if g.has_edge(lo, hi) and (lo, hi) not in on_cycle:
                ears.append((lo, hi))
            ears.extend(_ears_between(g, lo, hi, off))
    return ears


def good_ear(g: Graph, c: Cycle, segment: Iterable[int]) -> Ear | None:
    """The good ear of ``c`` with ends in ``segment``, or ``None`` if no such ear exists.

    Ends closest along the segment win, then the longest ear, then the
    least end pair, then the least vertex sequence.
    """
    order = segment_order(c, segment)
    where = {v: i for i, v in enumerate(order)}
    on_cycle = c.cycle_edges()
    off = g.full_mask & ~c.mask
    pairs = sorted(
        ((abs(where[a] - where[b]), min(a, b), max(a, b)) for i, a in enumerate(order) for b in order[i + 1:])
    )
    best_dist = None
    candidates: list[tuple[int, ...]] = []
    for dist, lo, hi in pairs:
        if best_dist is not None and dist > best_dist:
            break
        found = []
        if g.has_edge(lo, hi) and (lo, hi) not in on_cycle:
            found.append((lo, hi))
        found.extend(_ears_between(g, lo, hi, off))
        if found:
            best_dist = dist
            candidates.extend(found)
    if not candidates:
        return None
    best = min(candidates, key=lambda p: (-len(p), (p[0], p[-1]), p))
    return Ear(Path(best))


@dataclass(frozen=True)
class SmallQ:
    p1: Path
    p2: Path


@dataclass(frozen=True)
class PendantTail:
    v1: int
    p1: Path
    p2: Path


@dataclass(frozen=True)
class RemovableVertex:
    w: int
    p1: Path
    p2: Path


def _restricted(g: Graph, v: int, mask: int) -> int:
    return (g.rows[v] & mask).bit_count()


def choose_two_paths(h: Graph) -> tuple[Path, Path]:
    """P1 a longest path of ``h``; P2 a longest path of ``h - P1`` with d_P1(v1) <= d_P1(vq)."""
    p1 = longest_path(h)
    rest = h.full_mask & ~p1.mask
    if not rest:
        raise PreconditionViolated("h has a Hamiltonian path")
    p2 = longest_path(h, bits(rest))
    m1 = p1.mask
    if _restricted(h, p2[0], m1) > _restricted(h, p2[-1], m1):
        p2 = Path(tuple(reversed(p2.vertices)))
    return p1, p2


def no_ham_path_trichotomy(h: Graph) -> SmallQ | PendantTail | RemovableVertex:
    """Decide which of the three structural outcomes holds for ``h``.

    ``h`` must be connected with at least four vertices and have neither a
    chorded cycle nor a Hamiltonian path.  The clauses are tested in order;
    if none holds :class:`InvariantViolation` is raised.
    """
    from .cycles import find_chorded_cycle
    from .errors import InvariantViolation

    if h.n < 4 or not h.is_connected():
        raise PreconditionViolated("h must be connected with at least 4 vertices")
    if find_chorded_cycle(h) is not None:
        raise PreconditionViolated("h contains a chorded cycle")
    if has_hamiltonian_path(h):
        raise PreconditionViolated("h has a Hamiltonian path")
    p1, p2 = choose_two_paths(h)
    q = len(p2)
    covered = p1.mask | p2.mask
    if q <= 2 and covered == h.full_mask:
        return SmallQ(p1, p2)
    if q >= 3 and h.degree(p2[0]) == 1:
        return PendantTail(p2[0], p1, p2)
    u1, up = p1[0], p1[-1]
    for w in bits(h.full_mask & ~p1.mask & ~(1 << p2[0])):
        if h.degree(w) > 2 or h.has_edge(u1, w) or h.has_edge(up, w):
            continue
        if not is_cut_vertex(h, w):
            return RemovableVertex(w, p1, p2)
    raise InvariantViolation(f"no clause holds for {h!r} with P1={p1.vertices}, P2={p2.vertices}")


def v2_violations(h: Graph, path: Sequence[int]) -> list[str]:
    """Failures of the end-chord degree bounds along ``path`` (empty means all hold).

    If ``u_1 u_i`` is an edge with ``i >= 3`` then every ``u_j`` with
    ``j <= i-1`` has at most three neighbours on the path and ``u_{i-1}``
    has exactly two; symmetrically from the other end.
    """
    seq = tuple(path)
    p = len(seq)
    pm = to_mask(seq)
    out = []
    if p < 3:
        return out
    d = [_restricted(h, v, pm) for v in seq]
    for i in range(3, p + 1):
        if h.has_edge(seq[0], seq[i - 1]):
            if any(d[j - 1] > 3 for j in range(1, i)):
                out.append(f"front chord to u{i}: some d_P(u_j) > 3")
            if d[i - 2] != 2:
                out.append(f"front chord to u{i}: d_P(u{i - 1}) = {d[i - 2]}")
    for i in range(1, p - 1):
        if h.has_edge(seq[-1], seq[i - 1]):
            if any(d[j - 1] > 3 for j in range(i + 1, p + 1)):
                out.append(f"back chord to u{i}: some d_P(u_j) > 3")
            if d[i] != 2:
                out.append(f"back chord to u{i}: d_P(u{i + 1}) = {d[i]}")
    return out


def degree2_violations(h: Graph, p1: Path, p2: Path) -> list[str]:
    """Failures of the six degree facts about a longest path and a longest path of its complement."""
    out = []
    full = h.full_mask
    m1, m2 = p1.mask, p2.mask
    q = len(p2)
    for u in {p1[0], p1[-1]}:
        if _restricted(h, u, full & ~m1):
            out.append(f"(1) end {u} of P1 sees H-P1")
        if h.degree(u) > 2:
            out.append(f"(2) end {u} of P1 has degree {h.degree(u)}")
    for v in {p2[0], p2[-1]}:
        if _restricted(h, v, full & ~m1 & ~m2):
            out.append(f"(3) end {v} of P2 sees H-(P1+P2)")
        if _restricted(h, v, m2) > 2:
            out.append(f"(4) end {v} of P2 has d_P2 > 2")
    for pm in (m1, m2):
        for w in bits(full & ~pm):
            if _restricted(h, w, pm) > 2:
                out.append(f"(5) vertex {w} has more than two neighbours on a path")
    if q >= 2 and _restricted(h, p2[0], m1) + _restricted(h, p2[-1], m1) > 3:
        out.append("(6) ends of P2 send more than three edges to P1")
    return out
