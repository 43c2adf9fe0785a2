"""Brute-force ground truth, written independently of the search code.

Nothing here imports the cycle search or the packer.  A vertex set ``S``
carries a chorded cycle through all of its vertices iff ``<S>`` is
Hamiltonian and has more edges than vertices, so the oracle tabulates
Hamiltonicity of every vertex subset by dynamic programming and then looks
for pairwise disjoint qualifying subsets.
"""

from __future__ import annotations

import numpy as np

from .errors import CapacityExceeded
from .graph import Graph

__all__ = [
    "ORACLE_MAX_N",
    "chorded_set_table",
    "minimal_chorded_sets",
    "oracle_pack_exists",
    "has_chorded_cycle_cyclespace",
    "hamiltonian_cycle_on",
]

ORACLE_MAX_N = 16


def _popcount(a: np.ndarray) -> np.ndarray:
    return np.bitwise_count(a)


def chorded_set_table(g: Graph, cap: int = ORACLE_MAX_N) -> np.ndarray:
    """Boolean array over all ``2**n`` masks: does ``<mask>`` span a chorded cycle?"""
    n = g.n
    if n > cap:
        raise CapacityExceeded(f"oracle capped at n={cap}, got n={n}")
    size = 1 << n
    table = np.zeros(size, dtype=bool)
    if n < 4:
        return table
    masks = np.arange(size, dtype=np.int64)
    adj = np.array(g.rows, dtype=np.int64)
    pop = _popcount(masks)
    low_bit = masks & -masks
    low = np.zeros(size, dtype=np.int64)
    low[1:] = np.log2(low_bit[1:]).round().astype(np.int64)

    # ends[m]: vertices w such that some path covering m runs from min(m) to w.
    ends = np.zeros(size, dtype=np.int64)
    ends[low_bit[1:]] = low_bit[1:]
    layers = [masks[pop == k] for k in range(n + 1)]
    for k in range(2, n + 1):
        layer = layers[k]
        acc = np.zeros(layer.shape[0], dtype=np.int64)
        lb = low_bit[layer]
        for w in range(n):
            bit = 1 << w
            sel = ((layer & bit) != 0) & (lb != bit)
            if not sel.any():
                continue
            prev = ends[layer[sel] ^ bit]
            hit = (prev & adj[w]) != 0
            acc[sel] |= np.where(hit, bit, 0)
        ends[layer] = acc

    # edges[m] = edges[m minus its low vertex] + |N(low) & m|
    edges = np.zeros(size, dtype=np.int64)
    for k in range(2, n + 1):
        layer = layers[k]
        rest = layer ^ low_bit[layer]
        edges[layer] = edges[rest] + _popcount(adj[low[layer]] & rest)

    closes = (ends & adj[low]) != 0
    table = closes & (pop >= 4) & (edges >= pop + 1)
    return table


def minimal_chorded_sets(table: np.ndarray, n: int) -> list[int]:
    """Inclusion-minimal masks of ``table``, in increasing (size, mask) order."""
    size = 1 << n
    # strict[m]: some proper subset of m is flagged.
    below = table.copy()
    for i in range(n):
        bit = 1 << i
        idx = np.arange(size, dtype=np.int64)
        has = (idx & bit) != 0
        below[has] |= below[idx[has] ^ bit]
    strict = np.zeros(size, dtype=bool)
    for i in range(n):
        bit = 1 << i
        idx = np.arange(size, dtype=np.int64)
        has = (idx & bit) != 0
        strict[has] |= below[idx[has] ^ bit]
    found = np.nonzero(table & ~strict)[0]
    pops = _popcount(found)
    order = np.lexsort((found, pops))
    return [int(m) for m in found[order]]


def _contains_table(table: np.ndarray, n: int) -> np.ndarray:
    up = table.copy()
    idx = np.arange(1 << n, dtype=np.int64)
    for i in range(n):
        bit = 1 << i
        has = (idx & bit) != 0
        up[has] |= up[idx[has] ^ bit]
    return up


def hamiltonian_cycle_on(g: Graph, mask: int) -> list[int]:
    """Lexicographically least Hamiltonian cycle of ``<mask>`` from its minimum vertex."""
    verts = [v for v in range(g.n) if mask >> v & 1]
    start = verts[0]
    rows = g.rows
    seq = [start]
    dead: set[tuple[int, int]] = set()

    def dfs(v: int, used: int) -> bool:
        if used == mask:
            return bool(rows[v] >> start & 1)
        if (v, used) in dead:
            return False
        for w in verts:
            if not used >> w & 1 and rows[v] >> w & 1:
                seq.append(w)
                if dfs(w, used | 1 << w):
                    return True
                seq.pop()
        dead.add((v, used))
        return False

    if not dfs(start, 1 << start):
        raise AssertionError(f"mask {mask:#x} is not Hamiltonian")
    return seq


def _witness(g: Graph, mask: int) -> dict:
    seq = hamiltonian_cycle_on(g, mask)
    t = len(seq)
    on = {frozenset((seq[i], seq[(i + 1) % t])) for i in range(t)}
    chords = sorted(
        (u, v) for u in seq for v in seq if u < v and g.has_edge(u, v) and frozenset((u, v)) not in on
    )
    return {"cycle": seq, "chords": chords}


def oracle_pack_exists(g: Graph, s: int, cap: int = ORACLE_MAX_N) -> tuple[bool, list[dict] | None]:
    """Exhaustively decide whether ``g`` has ``s`` vertex-disjoint chorded cycles.

    Returns ``(exists, witness)`` where the witness lists each cycle as a
    dict with ``cycle`` and ``chords`` keys.
    """
    if s < 1:
        raise ValueError("s must be positive")
    n = g.n
    table = chorded_set_table(g, cap)
    if 4 * s > n:
        return False, None
    up = _contains_table(table, n)
    if s == 1:
        if not up[(1 << n) - 1]:
            return False, None
        first = minimal_chorded_sets(table, n)[0]
        return True, [_witness(g, first)]
    minimal = minimal_chorded_sets(table, n)
    by_low: list[int] = sorted(minimal, key=lambda m: ((m & -m), m.bit_count(), m))
    full = (1 << n) - 1

    def search(avail: int, need: int, floor: int) -> list[int] | None:
        if need == 1:
            if not up[avail]:
                return None
            for m in minimal:
                if m & avail == m:
                    return [m]
            return None
        if avail.bit_count() < 4 * need:
            return None
        for m in by_low:
            if (m & -m) <= floor or m & avail != m:
                continue
            rest = search(avail & ~m, need - 1, m & -m)
            if rest is not None:
                return [m] + rest
        return None

    chosen = search(full, s, 0)
    if chosen is None:
        return False, None
    return True, [_witness(g, m) for m in chosen]


def has_chorded_cycle_cyclespace(g: Graph) -> bool:
    """Chorded-cycle existence by walking the whole cycle space.

    Every element of the cycle space is tested for being a single cycle;
    only usable for sparse graphs (cost is ``2**(m - n + c)``).
    """
    n = g.n
    edges = g.edges()
    index = {e: k for k, e in enumerate(edges)}
    parent = [-1] * n
    depth = [0] * n
    seen = [False] * n
    tree: set[tuple[int, int]] = set()
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    tree.add((min(v, w), max(v, w)))
                    stack.append(w)
    basis = []
    for u, v in edges:
        if (u, v) in tree:
            continue
        vec = 1 << index[(u, v)]
        a, b = u, v
        while a != b:
            if depth[a] < depth[b]:
                a, b = b, a
            p = parent[a]
            vec ^= 1 << index[(min(a, p), max(a, p))]
            a = p
        basis.append(vec)
    k = len(basis)
    cur = 0
    for step in range(1, 1 << k):
        flip = (step & -step).bit_length() - 1
        cur ^= basis[flip]
        if _is_chorded_cycle_edges(g, edges, cur):
            return True
    return False


def _is_chorded_cycle_edges(g: Graph, edges: list[tuple[int, int]], vec: int) -> bool:
    deg: dict[int, int] = {}
    count = 0
    chosen = []
    v = vec
    while v:
        low = v & -v
        u, w = edges[low.bit_length() - 1]
        chosen.append((u, w))
        deg[u] = deg.get(u, 0) + 1
        deg[w] = deg.get(w, 0) + 1
        count += 1
        v ^= low
    if any(d != 2 for d in deg.values()):
        return False
    # one cycle iff connected
    adj: dict[int, list[int]] = {}
    for u, w in chosen:
        adj.setdefault(u, []).append(w)
        adj.setdefault(w, []).append(u)
    start = chosen[0][0]
    prev, cur, length = None, start, 0
    while True:
        a, b = adj[cur]
        nxt = b if a == prev else a
        prev, cur = cur, nxt
        length += 1
        if cur == start:
            break
    if length != len(deg):
        return False
    mask = 0
    for x in deg:
        mask |= 1 << x
    inside = sum((g.rows[x] & mask).bit_count() for x in deg) // 2
    return inside > count
