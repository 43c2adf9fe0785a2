"""Minimal and optimal systems of disjoint chorded cycles, and the packer.

An r-system is a list of ``r`` pairwise vertex-disjoint chorded cycles.  It
is *minimal* when its total vertex count is as small as possible and
*optimal* when, among minimal systems, the largest remainder component is
as large as possible (ties broken by the longest path inside such a
component, then lexicographically).

Every minimum system is made of inclusion-minimal chorded vertex sets
(a set is chorded when its induced subgraph has a chorded Hamiltonian
cycle), so the exact searches here only ever look at those sets.  They are
produced by :func:`minimal_chorded_sets`, shortest first.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .cycles import ChordedCycle, Path, _bfs_dist, _find_chorded_mask, two_core
from .errors import InvariantViolation, PathTooShort, PreconditionViolated
from .graph import Graph, bits, delta_2, require_exact, to_mask
from .structure import LONGEST_MAX_N, is_two_connected, longest_path

__all__ = [
    "RSystem",
    "PackingMetrics",
    "PackOutcome",
    "Witness",
    "NotFoundProven",
    "BudgetExhausted",
    "Len4",
    "Len5Pattern",
    "Len6TriangleFree",
    "SwapResult",
    "DEFAULT_BUDGET",
    "minimal_chorded_sets",
    "exact_min_system",
    "optimal_system",
    "check_minimality",
    "degree3_classify",
    "six_cycle_swap",
    "path_inequalities",
    "pack_chorded_cycles",
    "theorem_hypotheses",
]

DEFAULT_BUDGET = 2_000_000
THEOREM_VIOLATION = "THEOREM_VIOLATION"


class _OutOfBudget(Exception):
    pass


class _Budget:
    def __init__(self, limit: int | None):
        self.limit = limit
        self.nodes = 0

    def tick(self, k: int = 1) -> None:
        self.nodes += k
        if self.limit is not None and self.nodes > self.limit:
            raise _OutOfBudget


@dataclass(frozen=True)
class PackingMetrics:
    total_vertices: int
    remainder_max_component: int
    # None when the largest remainder component is too big for the exact longest-path search
    remainder_max_path_len: int | None


@dataclass(frozen=True, eq=False)
class RSystem:
    """Pairwise disjoint chorded cycles of ``host``; validated on construction."""

    cycles: tuple[ChordedCycle, ...]
    host: Graph

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(self.cycles))
        seen = 0
        for c in self.cycles:
            c.validate(self.host)
            if c.mask & seen:
                raise InvariantViolation("cycles of a system must be vertex-disjoint")
            seen |= c.mask

    def __len__(self) -> int:
        return len(self.cycles)

    def __eq__(self, other) -> bool:
        return isinstance(other, RSystem) and self.cycles == other.cycles and self.host == other.host

    def __hash__(self) -> int:
        return hash(self.cycles)

    @property
    def mask(self) -> int:
        return to_mask(v for c in self.cycles for v in c.cycle)

    @property
    def total_vertices(self) -> int:
        return self.mask.bit_count()

    @property
    def remainder_mask(self) -> int:
        return self.host.full_mask & ~self.mask

    @property
    def remainder(self) -> frozenset[int]:
        return frozenset(bits(self.remainder_mask))

    def metrics(self) -> PackingMetrics:
        return _metrics(self.host, self.mask)

    def to_dict(self) -> dict:
        return {"cycles": [c.to_dict() for c in self.cycles]}


def _largest_components(g: Graph, rest: int) -> tuple[int, list[int]]:
    comps = g.component_masks(rest) if rest else []
    if not comps:
        return 0, []
    top = max(c.bit_count() for c in comps)
    return top, [c for c in comps if c.bit_count() == top]


def _max_path_len(g: Graph, comps: list[int]) -> int | None:
    if not comps:
        return 0
    if comps[0].bit_count() > LONGEST_MAX_N:
        return None
    return max(longest_path(g, bits(c)).length for c in comps)


def _metrics(g: Graph, used: int) -> PackingMetrics:
    top, comps = _largest_components(g, g.full_mask & ~used)
    return PackingMetrics(used.bit_count(), top, _max_path_len(g, comps))


# -- minimal chorded vertex sets -------------------------------------------


def _quad_through(rows, w: int, used: int) -> bool:
    """Does ``used + w`` hold four vertices through ``w`` spanning at least five edges?

    Such a quadruple is exactly a chorded 4-cycle.  Either ``w`` sees three
    of them and one of those sees the other two, or ``w`` sees two of them
    that close a triangle with the fourth.
    """
    nw = rows[w] & used
    rest = nw
    while rest:
        low = rest & -rest
        rest ^= low
        ra = rows[low.bit_length() - 1]
        both = ra & nw
        if both & (both - 1):
            return True
        while both:
            lb = both & -both
            both ^= lb
            if ra & rows[lb.bit_length() - 1] & used:
                return True
    return False


def _minimal_sets(g: Graph, mask: int, max_len: int | None, budget: _Budget) -> list[tuple[int, ChordedCycle]]:
    """Inclusion-minimal chorded sets of ``<mask>`` by increasing size.

    Cycles are grown from their least vertex in ascending order.  A partial
    path whose vertex set already contains a known minimal set (4-sets are
    recognised by edge count alone) is cut, which
    also discards every later Hamiltonian cycle of a set already recorded,
    so each set keeps its lexicographically first canonical cycle.
    """
    core = two_core(g, mask)
    top = core.bit_count()
    if max_len is not None:
        top = min(top, max_len)
    rows = g.rows
    n = g.n
    containing: list[list[int]] = [[] for _ in range(n)]
    found: list[tuple[int, ChordedCycle]] = []
    quads: set[int] = set()
    if top < 4:
        return found
    dists: dict[int, list[int]] = {}

    for length in range(4, top + 1):
        for s in bits(core):
            allowed = core & ~((2 << s) - 1)
            if allowed.bit_count() + 1 < length:
                break
            dist = dists.get(s)
            if dist is None:
                dist = dists[s] = _bfs_dist(g, s, allowed)
            start_row = rows[s]
            done: set[tuple[int, int]] = set()
            seq = [s]

            def dfs(v: int, used: int, placed: int) -> None:
                if placed == length:
                    if start_row >> v & 1 and g.edges_within(used) > length and used not in quads:
                        cyc = ChordedCycle.from_sequence(g, seq)
                        found.append((used, cyc))
                        if length == 4:
                            quads.add(used)
                        else:
                            for w in seq:
                                containing[w].append(used)
                    return
                key = (v, used)
                if key in done:
                    return
                budget.tick()
                slack = length - placed
                cand = rows[v] & allowed & ~used
                while cand:
                    low = cand & -cand
                    cand ^= low
                    w = low.bit_length() - 1
                    if dist[w] > slack:
                        continue
                    grown = used | low
                    if length > 4 and _quad_through(rows, w, used):
                        continue
                    if any(m & grown == m for m in containing[w]):
                        continue
                    seq.append(w)
                    dfs(w, grown, placed + 1)
                    seq.pop()
                done.add(key)

            dfs(s, 1 << s, 1)
    found.sort(key=lambda item: (item[1].length, tuple(sorted(item[1].cycle))))
    return found


def minimal_chorded_sets(
    g: Graph, within: Iterable[int] | None = None, max_len: int | None = None
) -> list[ChordedCycle]:
    """One chorded cycle per inclusion-minimal chorded vertex set.

    Sorted by length, then by sorted vertex tuple.

    >>> from chordpack.graph import wheel
    >>> [c.cycle for c in minimal_chorded_sets(wheel(5))][:2]
    [(0, 1, 2, 3), (0, 2, 1, 4)]
    """
    require_exact(g)
    mask = g.full_mask if within is None else to_mask(within)
    return [c for _, c in _minimal_sets(g, mask, max_len, _Budget(None))]


# -- exact systems ---------------------------------------------------------


def _min_total_search(sets: list[tuple[int, ChordedCycle]], full: int, r: int, keep_ties: bool, budget: _Budget):
    """Branch and bound over index-increasing selections of ``r`` disjoint sets.

    Returns ``(best_total, selections)``; with ``keep_ties`` every selection
    reaching the best total is kept, otherwise only the first one found.
    """
    masks = [m for m, _ in sets]
    sizes = [m.bit_count() for m in masks]
    best = math.inf
    picks: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def dfs(start: int, avail: int, need: int, total: int) -> None:
        nonlocal best, picks
        if need == 0:
            if total < best:
                best, picks = total, [tuple(chosen)]
            elif keep_ties and total == best:
                picks.append(tuple(chosen))
            return
        if avail.bit_count() < 4 * need:
            return
        budget.tick()
        for i in range(start, len(masks)):
            bound = total + need * sizes[i]
            if bound > best or (bound == best and not keep_ties):
                break
            m = masks[i]
            if m & avail != m:
                continue
            chosen.append(i)
            dfs(i + 1, avail & ~m, need - 1, total + sizes[i])
            chosen.pop()

    dfs(0, full, r, 0)
    return best, picks


def _check_r(g: Graph, r: int) -> None:
    require_exact(g)
    if r < 1:
        raise ValueError("r must be positive")


def exact_min_system(g: Graph, r: int) -> RSystem | None:
    """An r-system of minimum total order, or ``None`` if none exists.

    Ties go to the selection that comes first when the minimal sets are
    ordered by (size, sorted vertex tuple).

    >>> from chordpack.graph import complete, cycle
    >>> exact_min_system(complete(8), 2).total_vertices
    8
    >>> exact_min_system(cycle(7), 1) is None
    True
    """
    _check_r(g, r)
    if 4 * r > g.n:
        return None
    sets = _minimal_sets(g, g.full_mask, None, _Budget(None))
    best, picks = _min_total_search(sets, g.full_mask, r, False, _Budget(None))
    if not picks:
        return None
    return RSystem(tuple(sets[i][1] for i in picks[0]), g)


def _optimal_from_sets(g: Graph, sets, r: int, budget: _Budget) -> RSystem | None:
    best, picks = _min_total_search(sets, g.full_mask, r, True, budget)
    if not picks:
        return None
    scored = []
    for pick in picks:
        used = 0
        for i in pick:
            used |= sets[i][0]
        top, comps = _largest_components(g, g.full_mask & ~used)
        scored.append((top, pick, comps))
    top = max(t for t, _, _ in scored)
    leaders = [(pick, comps) for t, pick, comps in scored if t == top]
    if len(leaders) > 1:
        lengths = [_max_path_len(g, comps) for _, comps in leaders]
        if all(x is not None for x in lengths):
            longest = max(lengths)
            leaders = [lead for lead, x in zip(leaders, lengths) if x == longest]
    return RSystem(tuple(sets[i][1] for i in leaders[0][0]), g)


def optimal_system(g: Graph, r: int) -> RSystem | None:
    """A minimal r-system whose largest remainder component is as large as possible.

    >>> from chordpack.graph import complete
    >>> optimal_system(complete(8), 2).metrics().remainder_max_component
    0
    """
    _check_r(g, r)
    if 4 * r > g.n:
        return None
    sets = _minimal_sets(g, g.full_mask, None, _Budget(None))
    return _optimal_from_sets(g, sets, r, _Budget(None))


def check_minimality(g: Graph, sys: RSystem) -> bool:
    """True iff no cycle of ``sys`` can be replaced by a shorter one using free vertices."""
    rest = sys.remainder_mask
    for c in sys.cycles:
        if _find_chorded_mask(g, c.mask | rest, c.length - 1) is not None:
            return False
    return True


# -- properties of minimal systems -----------------------------------------


@dataclass(frozen=True)
class Len4:
    degree: int


@dataclass(frozen=True)
class Len5Pattern:
    """``N_C(u) = {apex, far[0], far[1]}`` with both ``far`` vertices two steps from ``apex``."""

    apex: int
    far: tuple[int, int]


@dataclass(frozen=True)
class Len6TriangleFree:
    neighbors: tuple[int, int, int]


def _remainder_check(sys: RSystem, c: ChordedCycle, vertices: Iterable[int]) -> int:
    if c not in sys.cycles:
        raise PreconditionViolated("cycle is not part of the system")
    rest = sys.remainder_mask
    for v in vertices:
        if not rest >> v & 1:
            raise PreconditionViolated(f"vertex {v} is covered by the system")
    return rest


def _cycle_is_minimal(g: Graph, c: ChordedCycle, rest: int) -> bool:
    return _find_chorded_mask(g, c.mask | rest, c.length - 1) is None


def degree3_classify(g: Graph, sys: RSystem, c: ChordedCycle, u: int) -> Len4 | Len5Pattern | Len6TriangleFree:
    """Which shape a free vertex with three or more neighbours on ``c`` forces.

    Raises :class:`PreconditionViolated` if ``d_C(u) < 3`` or ``c`` can be
    shortened with free vertices, and :class:`InvariantViolation` if the
    forced shape does not hold.
    """
    rest = _remainder_check(sys, c, [u])
    on = g.rows[u] & c.mask
    d = on.bit_count()
    if d < 3:
        raise PreconditionViolated(f"d_C({u}) = {d} < 3")
    if not _cycle_is_minimal(g, c, rest):
        raise PreconditionViolated("system is not minimal around this cycle")
    t = c.length
    seq = c.cycle
    pos = [i for i, w in enumerate(seq) if on >> w & 1]
    if t == 4:
        return Len4(d)
    if t == 5 and d == 3:
        for i in pos:
            others = {(i + 2) % 5, (i + 3) % 5}
            if set(pos) - {i} == others:
                return Len5Pattern(seq[i], (seq[(i + 2) % 5], seq[(i + 3) % 5]))
        raise InvariantViolation(f"5-cycle neighbourhood of {u} is not the forced pattern")
    if t == 6 and d == 3:
        if len({p % 2 for p in pos}) != 1:
            raise InvariantViolation(f"neighbours of {u} do not alternate on the 6-cycle")
        for v in bits(rest):
            if _has_triangle(g, c.mask | 1 << v):
                raise InvariantViolation(f"<V(C) + {v}> contains a triangle")
        return Len6TriangleFree(tuple(sorted(seq[p] for p in pos)))
    raise InvariantViolation(f"free vertex {u} has {d} neighbours on a {t}-cycle")


def _has_triangle(g: Graph, mask: int) -> bool:
    rows = g.rows
    for a in bits(mask):
        na = rows[a] & mask & ~((2 << a) - 1)
        for b in bits(na):
            if rows[b] & na & ~((2 << b) - 1):
                return True
    return False


@dataclass(frozen=True)
class SwapResult:
    u_prime: int
    v_prime: int
    c_u: ChordedCycle
    c_v: ChordedCycle


def _labelings(seq: Sequence[int]):
    t = len(seq)
    for start in range(t):
        for step in (1, -1):
            yield [None] + [seq[(start + step * k) % t] for k in range(t)]


def six_cycle_swap(g: Graph, sys: RSystem, c: ChordedCycle, u: int, v: int) -> SwapResult:
    """Trade a vertex of a chorded 6-cycle for ``u`` and another for ``v``.

    Needs ``d_C(u, v) >= 5``.  Returns ``u'`` in ``N_C(u)`` and ``v'`` in
    ``N_C(v)`` with chorded 6-cycles ``c_u`` on ``V(C) - v' + u`` and ``c_v``
    on ``V(C) - u' + v``.

    Label ``C = u1..u6`` so that one of the two vertices, ``a``, sees
    exactly ``u1, u3, u5`` and the other, ``b``, sees ``u2`` and ``u4``.
    Then ``a u1 u6 u5 u4 u3`` (chord ``a u5``) drops ``u2``, and
    ``b u2 u1 u6 u5 u4`` drops ``u3`` when ``u1u4`` or ``u2u5`` is an edge,
    or ``b u2 u3 u6 u5 u4`` (chord ``u3u4``) drops ``u1`` when ``u3u6`` is.
    """
    if u == v:
        raise PreconditionViolated("u and v must be distinct")
    _remainder_check(sys, c, [u, v])
    rows = g.rows
    union = (rows[u] | rows[v]) & c.mask
    if union.bit_count() < 5:
        raise PreconditionViolated(f"d_C({u},{v}) = {union.bit_count()} < 5")
    if c.length != 6:
        raise PreconditionViolated(f"union degree >= 5 on a {c.length}-cycle: the system is not minimal")
    for a, b in ((u, v), (v, u)):
        na, nb = rows[a] & c.mask, rows[b] & c.mask
        for lab in _labelings(c.cycle):
            if na != to_mask((lab[1], lab[3], lab[5])):
                continue
            if not (nb >> lab[2] & 1 and nb >> lab[4] & 1):
                continue
            c_a = ChordedCycle.from_sequence(g, [a, lab[1], lab[6], lab[5], lab[4], lab[3]])
            b_drop = lab[2]
            if g.has_edge(lab[1], lab[4]) or g.has_edge(lab[2], lab[5]):
                seq_b, a_drop = [b, lab[2], lab[1], lab[6], lab[5], lab[4]], lab[3]
            elif g.has_edge(lab[3], lab[6]):
                seq_b, a_drop = [b, lab[2], lab[3], lab[6], lab[5], lab[4]], lab[1]
            else:
                continue
            try:
                c_b = ChordedCycle.from_sequence(g, seq_b)
            except InvariantViolation:
                continue
            if a == u:
                return SwapResult(a_drop, b_drop, c_a, c_b)
            return SwapResult(b_drop, a_drop, c_b, c_a)
    raise InvariantViolation(f"no 6-cycle exchange for {u},{v}")


def path_inequalities(g: Graph, sys: RSystem, c: ChordedCycle, path: Path | Sequence[int]) -> tuple[bool, bool, bool]:
    """The three union-degree bounds for a free path ``x1 x2 ...`` against ``c``.

    Clause 1 needs four path vertices; clauses 2 and 3 need five, and
    clause 3 also needs the edge ``x2 x4``.  Inapplicable clauses are true.
    """
    xs = tuple(path)
    if len(xs) < 4:
        raise PathTooShort(f"path has {len(xs)} vertices, need at least 4")
    _remainder_check(sys, c, xs)
    if not Path(xs).is_valid(g):
        raise PreconditionViolated(f"{xs} is not a path of the host graph")
    rows, cm = g.rows, c.mask

    def d(i: int, j: int) -> int:
        return ((rows[xs[i - 1]] | rows[xs[j - 1]]) & cm).bit_count()

    first = d(1, 3) + d(1, 4) + d(2, 4) <= 12
    if len(xs) < 5:
        return first, True, True
    second = d(1, 3) + d(2, 4) + d(3, 5) <= 12
    third = True
    if g.has_edge(xs[1], xs[3]):
        third = d(1, 3) + d(1, 4) + d(2, 5) <= 12
    return first, second, third


# -- packer ----------------------------------------------------------------


@dataclass(frozen=True)
class PackOutcome:
    strategy: str
    flags: tuple[str, ...] = ()
    stats: dict = field(default_factory=dict, compare=False)

    @property
    def found(self) -> bool:
        return isinstance(self, Witness)


@dataclass(frozen=True)
class Witness(PackOutcome):
    system: RSystem | None = None


@dataclass(frozen=True)
class NotFoundProven(PackOutcome):
    pass


@dataclass(frozen=True)
class BudgetExhausted(PackOutcome):
    pass


def theorem_hypotheses(g: Graph, s: int) -> dict:
    """2-connected, order at least 4s, and ``delta_2 >= 4s`` or complete."""
    d2 = delta_2(g)
    complete = g.is_complete()
    two = is_two_connected(g)
    order_ok = g.n >= 4 * s
    return {
        "two_connected": two,
        "order_ok": order_ok,
        "delta2": d2,
        "complete": complete,
        "holds": two and order_ok and (complete or d2 >= 4 * s),
    }


def _complete_partition(g: Graph, s: int) -> list[ChordedCycle]:
    verts = list(range(g.n))
    blocks = [verts[4 * i : 4 * i + 4] for i in range(s - 1)] + [verts[4 * (s - 1) :]]
    return [ChordedCycle.from_sequence(g, b) for b in blocks]


def _greedy(g: Graph, s: int, avail: int) -> list[ChordedCycle] | None:
    out = []
    for _ in range(s):
        c = _find_chorded_mask(g, avail)
        if c is None:
            return None
        out.append(c)
        avail &= ~c.mask
    return out


def _score(g: Graph, used: int) -> tuple:
    m = _metrics(g, used)
    return (-m.total_vertices, m.remainder_max_component, -1 if m.remainder_max_path_len is None else m.remainder_max_path_len)


def _exchanges(g: Graph, cycles: list[ChordedCycle], rest: int):
    """Candidate replacements ``(index, new_cycle, move)``, in a fixed order.

    Six-cycle swaps first, then single-vertex exchanges: a cycle vertex
    leaves and a free vertex joins, whenever the new set still carries a
    chorded cycle no longer than the old one.
    """
    rows = g.rows
    for k, c in enumerate(cycles):
        if c.length != 6:
            continue
        free = [x for x in bits(rest) if rows[x] & c.mask]
        for i, u in enumerate(free):
            for v in free[i + 1 :]:
                if ((rows[u] | rows[v]) & c.mask).bit_count() < 5:
                    continue
                sys = RSystem(tuple(cycles), g)
                try:
                    res = six_cycle_swap(g, sys, c, u, v)
                except (InvariantViolation, PreconditionViolated):
                    continue
                yield k, res.c_u, "six_cycle_swap"
                yield k, res.c_v, "six_cycle_swap"
    for k, c in enumerate(cycles):
        for x in bits(rest):
            if (rows[x] & c.mask).bit_count() < 2:
                continue
            for w in c.cycle:
                new = _find_chorded_mask(g, (c.mask & ~(1 << w)) | 1 << x, c.length)
                if new is not None:
                    yield k, new, "vertex_exchange"


def _local_search(g: Graph, s: int, base: list[ChordedCycle], moves: int, stats: dict) -> list[ChordedCycle] | None:
    cycles = list(base)
    used = to_mask(v for c in cycles for v in c.cycle)
    score = _score(g, used)
    for _ in range(moves):
        rest = g.full_mask & ~used
        extra = _find_chorded_mask(g, rest)
        if extra is not None:
            return cycles + [extra]
        improved = False
        for k, new, move in _exchanges(g, cycles, rest):
            trial = cycles[:k] + [new] + cycles[k + 1 :]
            trial_used = to_mask(v for c in trial for v in c.cycle)
            trial_rest = g.full_mask & ~trial_used
            extra = _find_chorded_mask(g, trial_rest)
            if extra is not None:
                stats["moves"] = stats.get("moves", 0) + 1
                stats.setdefault("move_log", []).append(move)
                return trial + [extra]
            trial_score = _score(g, trial_used)
            if trial_score > score:
                stats["moves"] = stats.get("moves", 0) + 1
                stats.setdefault("move_log", []).append(move)
                cycles, used, score = trial, trial_used, trial_score
                improved = True
                break
        if not improved:
            return None
    stats["move_bound_hit"] = True
    return None


def _disjoint_search(sets, full: int, s: int, budget: _Budget) -> tuple[int, ...] | None:
    masks = [m for m, _ in sets]
    chosen: list[int] = []

    def dfs(start: int, avail: int, need: int) -> bool:
        if need == 0:
            return True
        if avail.bit_count() < 4 * need:
            return False
        budget.tick()
        for i in range(start, len(masks)):
            m = masks[i]
            if m & avail == m:
                chosen.append(i)
                if dfs(i + 1, avail & ~m, need - 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if dfs(0, full, s) else None


def pack_chorded_cycles(g: Graph, s: int, budget: int | None = DEFAULT_BUDGET, moves: int | None = None) -> PackOutcome:
    """Look for ``s`` vertex-disjoint chorded cycles.

    Strategies in order: complete-graph partition, greedy shortest-first
    extraction, local search from an optimal ``(s-1)``-system, exhaustive
    search over minimal chorded sets.  Only the exhaustive stage (or the
    trivial ``n < 4s`` bound) can prove absence; running out of ``budget``
    search nodes yields :class:`BudgetExhausted`.

    >>> from chordpack.graph import complete
    >>> out = pack_chorded_cycles(complete(8), 2)
    >>> out.strategy, [c.cycle for c in out.system.cycles]
    ('complete_partition', [(0, 1, 2, 3), (4, 5, 6, 7)])
    """
    if s < 1:
        raise ValueError("s must be positive")
    require_exact(g)
    hyp = theorem_hypotheses(g, s)

    def absent(strategy: str, stats: dict) -> NotFoundProven:
        flags = (THEOREM_VIOLATION,) if hyp["holds"] else ()
        return NotFoundProven(strategy, flags, stats)

    def witness(strategy: str, cycles, stats: dict) -> Witness:
        system = RSystem(tuple(cycles), g)
        if len(system) != s:
            raise InvariantViolation("witness has the wrong number of cycles")
        return Witness(strategy, (), stats, system)

    stats: dict = {}
    if g.n < 4 * s:
        return absent("order_bound", stats)
    if g.is_complete():
        return witness("complete_partition", _complete_partition(g, s), stats)
    found = _greedy(g, s, g.full_mask)
    if found is not None:
        return witness("greedy", found, stats)
    if s == 1:
        # the shortest-first search is exhaustive on its own
        return absent("exhaustive", stats)

    meter = _Budget(budget)
    try:
        sets = _minimal_sets(g, g.full_mask, None, meter)
        base = _optimal_from_sets(g, sets, s - 1, meter)
        if base is None:
            stats["nodes"] = meter.nodes
            return absent("exhaustive", stats)
        limit = moves if moves is not None else max(1, len(g.component_masks(base.remainder_mask)) + g.n)
        found = _local_search(g, s, list(base.cycles), limit, stats)
        if found is not None:
            stats["nodes"] = meter.nodes
            return witness("local_search", found, stats)
        pick = _disjoint_search(sets, g.full_mask, s, meter)
    except _OutOfBudget:
        stats["nodes"] = meter.nodes
        return BudgetExhausted("exhaustive", (), stats)
    stats["nodes"] = meter.nodes
    if pick is None:
        return absent("exhaustive", stats)
    return witness("exhaustive", [sets[i][1] for i in pick], stats)
