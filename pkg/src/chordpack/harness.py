"""Theorem checks, sweeps over graph6 streams, and lemma property suites.

Reports are plain dataclasses with a ``to_dict`` for JSON output.  The
brute-force oracle lives in :mod:`chordpack.oracle` and shares no search
code with the packer; witnesses are re-checked here by a third, minimal
validator before any report calls them a pass.
"""

from __future__ import annotations

import itertools
import math
import time
from collections import Counter
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import networkx as nx
import numpy as np

from . import oracle as _oracle
from .cycles import ChordedCycle, find_chorded_cycle
from .errors import CapacityExceeded, ChordPackError, InvariantViolation
from .generators import Xorshift64Star, random_graph
from .graph import Graph, bits, delta_2
from .graph6 import parse_graph6, serialize_graph6
from .packing import (
    DEFAULT_BUDGET,
    BudgetExhausted,
    NotFoundProven,
    RSystem,
    Witness,
    check_minimality,
    degree3_classify,
    exact_min_system,
    pack_chorded_cycles,
    path_inequalities,
    six_cycle_swap,
    theorem_hypotheses,
)
from .structure import (
    LONGEST_MAX_N,
    choose_two_paths,
    degree2_violations,
    has_hamiltonian_path,
    no_ham_path_trichotomy,
    v2_violations,
)
from .twopath import TEMPLATES, NoChordedTemplate, TwoPathConfig, two_path_analyze

__all__ = [
    "SCHEMA_VERSION",
    "OUTCOMES",
    "InstanceReport",
    "SweepSummary",
    "oracle_pack_exists",
    "validate_witness",
    "check_theorem_instance",
    "sweep",
    "lemma_suite",
    "chorded_free_graphs",
    "no_ham_path_domain",
    "two_path_configs",
    "system_suites",
]

SCHEMA_VERSION = 1
OUTCOMES = ("VacuousPass", "Pass", "TheoremViolation", "OracleDisagreement", "Inconclusive")
SCOPES = ("two_path", "degree2", "v2", "c_mini", "five_path", "degree3", "six_cycle")


def _json_value(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    return x


def oracle_pack_exists(g: Graph, s: int, cap: int = _oracle.ORACLE_MAX_N) -> tuple[bool, RSystem | None]:
    """Brute-force existence of ``s`` disjoint chorded cycles, with the witness as a system."""
    exists, raw = _oracle.oracle_pack_exists(g, s, cap)
    if not exists:
        return False, None
    cycles = tuple(ChordedCycle(tuple(w["cycle"]), frozenset(map(tuple, w["chords"]))) for w in raw)
    return True, RSystem(cycles, g)


def validate_witness(g: Graph, cycles: list[dict], s: int | None = None) -> list[str]:
    """Problems with a witness given as ``{"cycle": [...], "chords": [...]}`` dicts; empty means valid."""
    problems = []
    if s is not None and len(cycles) != s:
        problems.append(f"expected {s} cycles, got {len(cycles)}")
    used: set[int] = set()
    for k, w in enumerate(cycles):
        seq = list(w["cycle"])
        t = len(seq)
        if t < 4 or len(set(seq)) != t:
            problems.append(f"cycle {k} is not a simple cycle on at least 4 vertices")
            continue
        if used & set(seq):
            problems.append(f"cycle {k} meets an earlier cycle")
        used |= set(seq)
        ring = {frozenset((seq[i], seq[(i + 1) % t])) for i in range(t)}
        if any(not g.has_edge(*tuple(e)) for e in ring):
            problems.append(f"cycle {k} uses a non-edge")
        chords = [tuple(c) for c in w["chords"]]
        if not chords:
            problems.append(f"cycle {k} has no chord")
        for a, b in chords:
            if a not in seq or b not in seq or frozenset((a, b)) in ring or not g.has_edge(a, b):
                problems.append(f"cycle {k}: {a}-{b} is not a chord")
    return problems


@dataclass
class InstanceReport:
    graph_id: str
    s: int
    hypotheses: dict
    outcome: str
    witness: list | None = None
    witness_source: str | None = None
    packer: str | None = None
    oracle: bool | None = None
    notes: list = field(default_factory=list)

    def to_dict(self) -> dict:
        hyp = {k: _json_value(v) for k, v in self.hypotheses.items()}
        return {
            "graph_id": self.graph_id,
            "s": self.s,
            "hypotheses": hyp,
            "outcome": self.outcome,
            "witness": self.witness,
            "witness_source": self.witness_source,
            "packer": self.packer,
            "oracle": self.oracle,
            "notes": list(self.notes),
        }


def check_theorem_instance(
    g: Graph, s: int, oracle_cap: int = _oracle.ORACLE_MAX_N, budget: int | None = DEFAULT_BUDGET
) -> InstanceReport:
    """Evaluate the hypotheses, run the packer and (within the cap) the oracle.

    Packer and oracle are run even when a hypothesis fails, so a conflict
    between them is reported as ``OracleDisagreement`` in every case.
    """
    hyp = theorem_hypotheses(g, s)
    holds = hyp.pop("holds")
    report = InstanceReport(serialize_graph6(g), s, hyp, "Pass")
    out = pack_chorded_cycles(g, s, budget)
    report.packer = f"{type(out).__name__}:{out.strategy}"
    if isinstance(out, Witness):
        report.witness = [c.to_dict() for c in out.system.cycles]
        report.witness_source = "packer"
        problems = validate_witness(g, report.witness, s)
        if problems:
            raise InvariantViolation(f"packer witness failed validation: {problems}")
    if g.n <= oracle_cap:
        exists, sys = oracle_pack_exists(g, s, oracle_cap)
        report.oracle = exists
    else:
        exists, sys = None, None
        report.notes.append(f"oracle skipped: n={g.n} > cap {oracle_cap}")

    claimed = None if isinstance(out, BudgetExhausted) else isinstance(out, Witness)
    if exists is not None and claimed is not None and claimed != exists:
        report.outcome = "OracleDisagreement"
        return report
    if isinstance(out, BudgetExhausted) and exists:
        report.witness = [c.to_dict() for c in sys.cycles]
        report.witness_source = "oracle"
        report.notes.append("packer budget exhausted")
    if not holds:
        report.outcome = "VacuousPass"
        if report.witness is not None:
            report.notes.append("witness found although the hypotheses fail")
        return report
    if report.witness is not None:
        report.outcome = "Pass"
    elif isinstance(out, NotFoundProven) or exists is False:
        report.outcome = "TheoremViolation"
    else:
        report.outcome = "Inconclusive"
    return report


@dataclass
class SweepSummary:
    mode: str
    s: int | None
    counts: dict
    total: int
    outcomes: list = field(default_factory=list)
    boundary_witnesses: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    violations: list = field(default_factory=list)
    config: dict = field(default_factory=dict)
    wall_seconds: float = 0.0

    @property
    def clean(self) -> bool:
        bad = self.counts.get("TheoremViolation", 0) + self.counts.get("OracleDisagreement", 0)
        return bad == 0 and not self.violations and not self.boundary_witnesses

    def exit_code(self) -> int:
        return 0 if self.clean else 2

    def to_dict(self, timing: bool = False) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "mode": self.mode,
            "s": self.s,
            "totals": {"total": self.total, **dict(sorted(self.counts.items()))},
            "outcomes": self.outcomes,
            "boundary_witnesses": sorted(self.boundary_witnesses, key=lambda w: (w["line"], w["graph_id"])),
            "errors": self.errors,
            "violations": self.violations,
            "config": self.config,
            "timing": {"wall_seconds": round(self.wall_seconds, 3) if timing else None},
        }


def _sweep_line(args) -> dict:
    index, line, s, mode, oracle_cap, budget = args
    text = line.strip()
    try:
        g = parse_graph6(text)
    except ChordPackError as exc:
        return {"line": index, "error": str(exc)}
    if mode == "verify":
        rep = check_theorem_instance(g, s, oracle_cap, budget)
        return {"line": index, "report": rep.to_dict()}
    # hunt_boundary
    d2 = delta_2(g)
    hyp = theorem_hypotheses(g, s)
    if d2 != 4 * s - 1 or not hyp["two_connected"] or not hyp["order_ok"]:
        return {"line": index, "skipped": True}
    if g.n <= oracle_cap:
        exists, _ = oracle_pack_exists(g, s, oracle_cap)
        source = "oracle"
    else:
        out = pack_chorded_cycles(g, s, budget)
        exists = None if isinstance(out, BudgetExhausted) else isinstance(out, Witness)
        source = "packer"
    return {"line": index, "candidate": True, "exists": exists, "source": source, "graph_id": serialize_graph6(g)}


def _ordered_map(fn, items: Iterable, jobs: int) -> Iterator:
    if jobs <= 1:
        for item in items:
            yield fn(item)
        return
    window = 4 * jobs
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        pending = []
        for item in items:
            pending.append(pool.submit(fn, item))
            if len(pending) >= window:
                yield pending.pop(0).result()
        for fut in pending:
            yield fut.result()


def sweep(
    stream: Iterable[str],
    s: int,
    mode: str = "verify",
    jobs: int = 1,
    oracle_cap: int = _oracle.ORACLE_MAX_N,
    budget: int | None = DEFAULT_BUDGET,
    keep_outcomes: bool = True,
) -> SweepSummary:
    """Check every graph6 line of ``stream``; blank lines are ignored.

    ``verify`` runs :func:`check_theorem_instance` per line.
    ``hunt_boundary`` keeps 2-connected graphs of order at least ``4s``
    with ``delta_2 = 4s - 1`` and records those proven non-packable.
    """
    if mode not in ("verify", "hunt_boundary"):
        raise ValueError(f"unknown sweep mode {mode!r}")
    start = time.perf_counter()
    summary = SweepSummary(mode, s, Counter(), 0, config={"oracle_cap": oracle_cap, "budget": budget, "jobs": jobs})
    work = (
        (i, line, s, mode, oracle_cap, budget) for i, line in enumerate(stream) if line.strip()
    )
    for res in _ordered_map(_sweep_line, work, jobs):
        summary.total += 1
        if "error" in res:
            summary.counts["ParseError"] += 1
            summary.errors.append({"line": res["line"], "error": res["error"]})
        elif "report" in res:
            rep = res["report"]
            summary.counts[rep["outcome"]] += 1
            if keep_outcomes:
                summary.outcomes.append({"line": res["line"], **rep})
        elif res.get("skipped"):
            summary.counts["Skipped"] += 1
        else:
            summary.counts["Candidate"] += 1
            if res["exists"] is None:
                summary.counts["Inconclusive"] += 1
            elif not res["exists"]:
                summary.boundary_witnesses.append(
                    {"line": res["line"], "graph_id": res["graph_id"], "source": res["source"], "tag": "BOUNDARY_WITNESS"}
                )
    summary.counts = dict(summary.counts)
    summary.wall_seconds = time.perf_counter() - start
    return summary


# -- exhaustive domains ----------------------------------------------------


def two_path_configs(max_p: int, max_q: int, max_cross: int) -> Iterator[TwoPathConfig]:
    for p in range(1, max_p + 1):
        for q in range(1, max_q + 1):
            pairs = [(i, j) for i in range(1, p + 1) for j in range(1, q + 1)]
            for k in range(0, min(max_cross, len(pairs)) + 1):
                for cross in itertools.combinations(pairs, k):
                    yield TwoPathConfig(p, q, cross)


def _nx(g: Graph) -> nx.Graph:
    return g.to_networkx()


def _extend(g: Graph, nbrs: int) -> Graph:
    n = g.n
    rows = list(g.rows) + [nbrs]
    for w in bits(nbrs):
        rows[w] |= 1 << n
    return Graph._trusted(n + 1, tuple(rows))


def chorded_free_graphs(max_n: int) -> dict[int, list[Graph]]:
    """Every graph without a chorded cycle on ``1..max_n`` vertices, one per isomorphism class.

    Built by adding a vertex at a time: deleting a vertex never creates a
    chorded cycle, so each class on ``n`` vertices extends one on ``n - 1``.
    Isomorphism is settled by networkx (hash buckets, then an exact test).
    """
    out = {1: [Graph(1, [0])]}
    for n in range(2, max_n + 1):
        buckets: dict[str, list[tuple[Graph, nx.Graph]]] = {}
        for g in out[n - 1]:
            for nbrs in range(1 << (n - 1)):
                h = _extend(g, nbrs)
                if find_chorded_cycle(h) is not None:
                    continue
                hx = _nx(h)
                key = nx.weisfeiler_lehman_graph_hash(hx, iterations=3)
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(hx, other) for _, other in bucket):
                    continue
                bucket.append((h, hx))
        out[n] = [h for key in sorted(buckets) for h, _ in buckets[key]]
    return out


def no_ham_path_domain(max_n: int) -> list[Graph]:
    """Connected graphs on ``4..max_n`` vertices with neither a chorded cycle nor a Hamiltonian path."""
    free = chorded_free_graphs(max_n)
    return [
        g
        for n in range(4, max_n + 1)
        for g in free[n]
        if g.is_connected() and not has_hamiltonian_path(g)
    ]


def _paths(g: Graph, within: int, size: int) -> Iterator[tuple[int, ...]]:
    """Every path on ``size`` vertices of ``<within>``, both directions."""
    rows = g.rows

    def grow(seq, used):
        if len(seq) == size:
            yield tuple(seq)
            return
        for w in bits(rows[seq[-1]] & within & ~used):
            seq.append(w)
            yield from grow(seq, used | 1 << w)
            seq.pop()

    for v in bits(within):
        yield from grow([v], 1 << v)


# -- lemma suites ----------------------------------------------------------


def _corrupted_instance() -> tuple[Graph, RSystem]:
    """A chorded 6-cycle next to a free path whose first two vertices see the whole cycle."""
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)]
    edges += [(6, 7), (7, 8), (8, 9), (9, 10)]
    edges += [(x, c) for x in (6, 7) for c in range(6)]
    g = Graph.from_edges(11, edges)
    sys = RSystem((ChordedCycle.from_sequence(g, range(6)),), g)
    return g, sys


def _random_bipartite(n: int, p: float, rng: Xorshift64Star) -> Graph:
    left = n // 2
    rows = [0] * n
    for i in range(left):
        for j in range(left, n):
            if rng.random() < p:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph._trusted(n, tuple(rows))


def _random_instance(seed: int, max_n: int) -> tuple[Graph, int]:
    """Seeded mix of ``G(n, p)`` at several densities and random bipartite graphs.

    Bipartite hosts have no chorded 4- or 5-cycles, so their minimal systems
    use 6-cycles and reach the 6-cycle clauses.
    """
    rng = Xorshift64Star(seed)
    n = 6 + rng.below(max(1, max_n - 5))
    r = 1 + rng.below(2)
    if rng.below(3) == 0:
        g = _random_bipartite(n, (0.5, 0.65, 0.8)[rng.below(3)], rng)
    else:
        g = random_graph(n, (0.25, 0.35, 0.5, 0.7, 0.9)[rng.below(5)], rng.next_u64())
    return g, r


def _system_checks(scope: str, g: Graph, sys: RSystem) -> tuple[int, list[str]]:
    checks = 0
    bad: list[str] = []
    rest = sys.remainder_mask
    rows = g.rows
    gid = serialize_graph6(g)
    if scope == "c_mini":
        checks += 1
        if not check_minimality(g, sys):
            bad.append(f"{gid}: a cycle can be shortened with free vertices")
        return checks, bad
    for c in sys.cycles:
        if scope == "degree3":
            for u in bits(rest):
                if (rows[u] & c.mask).bit_count() < 3:
                    continue
                checks += 1
                try:
                    degree3_classify(g, sys, c, u)
                except ChordPackError as exc:
                    bad.append(f"{gid}: degree-3 at {u}: {exc}")
        elif scope == "five_path":
            for size in (4, 5):
                for xs in _paths(g, rest, size):
                    checks += 1
                    res = path_inequalities(g, sys, c, xs)
                    if not all(res):
                        bad.append(f"{gid}: path {xs} gives {res}")
        elif scope == "six_cycle":
            free = list(bits(rest))
            for i, u in enumerate(free):
                for v in free[i + 1 :]:
                    if ((rows[u] | rows[v]) & c.mask).bit_count() < 5:
                        continue
                    checks += 1
                    try:
                        res = six_cycle_swap(g, sys, c, u, v)
                    except ChordPackError as exc:
                        bad.append(f"{gid}: swap {u},{v}: {exc}")
                        continue
                    if res.c_u.vertex_set != (c.vertex_set - {res.v_prime}) | {u}:
                        bad.append(f"{gid}: swap {u},{v}: c_u on the wrong vertex set")
                    if res.c_v.vertex_set != (c.vertex_set - {res.u_prime}) | {v}:
                        bad.append(f"{gid}: swap {u},{v}: c_v on the wrong vertex set")
    return checks, bad


def lemma_suite(
    scope: str,
    bound: int,
    seed: int = 0,
    instances: int = 1000,
    corrupt: bool = False,
    max_cross: int = 6,
) -> SweepSummary:
    """Run one family of lemma checks and count violations (expected: none).

    * ``two_path``: every configuration with ``p, q <= bound`` and at most
      ``max_cross`` cross edges, verdict against a cycle-space brute force.
    * ``degree2``/``v2``: every connected graph on at most ``bound``
      vertices with no chorded cycle and no Hamiltonian path.
    * ``c_mini``/``five_path``/``degree3``/``six_cycle``: ``instances``
      seeded random graphs on at most ``bound`` vertices that have a
      minimum 1- or 2-system (hosts without one are skipped).  ``corrupt``
      adds one deliberately non-minimal system as a negative control.
    """
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}")
    start = time.perf_counter()
    counts = Counter()
    violations: list[str] = []
    if scope == "two_path":
        for cfg in two_path_configs(bound, bound, max_cross):
            counts["instances"] += 1
            verdict = two_path_analyze(cfg)
            truth = _oracle.has_chorded_cycle_cyclespace(cfg.realize())
            counts["checks"] += 1
            if truth != (type(verdict).__name__ == "Chorded"):
                violations.append(f"{cfg}: verdict {verdict} but brute force says {truth}")
            if len(cfg.cross) in (3, 4) and not truth:
                if not isinstance(verdict, NoChordedTemplate) or verdict.id not in {t.id for t in TEMPLATES}:
                    violations.append(f"{cfg}: no template named")
    elif scope in ("degree2", "v2"):
        if bound > LONGEST_MAX_N:
            raise CapacityExceeded(f"bound {bound} above {LONGEST_MAX_N}")
        for h in no_ham_path_domain(bound):
            counts["instances"] += 1
            gid = serialize_graph6(h)
            if scope == "degree2":
                counts["checks"] += 1
                try:
                    no_ham_path_trichotomy(h)
                except ChordPackError as exc:
                    violations.append(f"{gid}: trichotomy: {exc}")
                p1, p2 = choose_two_paths(h)
                for msg in degree2_violations(h, p1, p2):
                    violations.append(f"{gid}: {msg}")
            else:
                for size in range(3, h.n + 1):
                    for xs in _paths(h, h.full_mask, size):
                        counts["checks"] += 1
                        for msg in v2_violations(h, xs):
                            violations.append(f"{gid} path {xs}: {msg}")
    else:
        return system_suites([scope], bound, seed, instances, corrupt)[scope]
    counts["violations"] = len(violations)
    summary = SweepSummary(
        f"lemma:{scope}",
        None,
        dict(counts),
        counts["instances"],
        violations=violations,
        config={"bound": bound, "seed": seed, "instances": instances, "corrupt": corrupt},
    )
    summary.wall_seconds = time.perf_counter() - start
    return summary


def _system_cases(bound: int, seed: int, instances: int, counts: Counter) -> list[tuple[Graph, RSystem]]:
    cases: list[tuple[Graph, RSystem]] = []
    k = 0
    # only hosts that carry a system count towards ``instances``
    while len(cases) < instances:
        g, r = _random_instance(seed * 1_000_003 + k, bound)
        k += 1
        sys = exact_min_system(g, r)
        if sys is None:
            counts["skipped"] += 1
            continue
        cases.append((g, sys))
    return cases


def system_suites(
    scopes: Iterable[str], bound: int, seed: int = 0, instances: int = 1000, corrupt: bool = False
) -> dict[str, SweepSummary]:
    """The minimal-system scopes of :func:`lemma_suite` over one shared set of instances."""
    scopes = list(scopes)
    for scope in scopes:
        if scope not in ("c_mini", "five_path", "degree3", "six_cycle"):
            raise ValueError(f"{scope!r} is not a minimal-system scope")
    start = time.perf_counter()
    shared = Counter()
    cases = _system_cases(bound, seed, instances, shared)
    if corrupt:
        cases.append(_corrupted_instance())
    setup = time.perf_counter() - start
    out = {}
    for scope in scopes:
        t0 = time.perf_counter()
        counts = Counter(shared)
        counts["instances"] = len(cases)
        violations: list[str] = []
        for g, sys in cases:
            checks, bad = _system_checks(scope, g, sys)
            counts["checks"] += checks
            violations.extend(bad)
        counts["violations"] = len(violations)
        summary = SweepSummary(
            f"lemma:{scope}",
            None,
            dict(counts),
            len(cases),
            violations=violations,
            config={"bound": bound, "seed": seed, "instances": instances, "corrupt": corrupt},
        )
        summary.wall_seconds = setup + time.perf_counter() - t0
        out[scope] = summary
    return out


def theorem_domain_codes(n: int, s: int = 1) -> np.ndarray:
    """Codes (see :func:`chordpack.generators.graph_from_code`) of every labeled graph on
    ``n`` vertices that is 2-connected with ``delta_2 >= 4s`` or complete."""
    from .generators import adjacency_rows, labeled_graph_codes

    codes = labeled_graph_codes(n)
    if n < 3:
        return codes[:0]
    rows = adjacency_rows(n, codes)
    full = (1 << n) - 1
    complete = np.ones(codes.shape[0], dtype=bool)
    for v in range(n):
        complete &= rows[v] == (full & ~(1 << v))
    bound = np.ones(codes.shape[0], dtype=bool)
    for u in range(n):
        for v in range(u + 1, n):
            nonadj = ((rows[u] >> v) & 1) == 0
            union = np.bitwise_count(rows[u] | rows[v])
            bound &= ~nonadj | (union >= 4 * s)
    keep = complete | bound

    def connected_without(skip: int | None) -> np.ndarray:
        alive = full if skip is None else full & ~(1 << skip)
        start = 0 if skip != 0 else 1
        reach = np.full(codes.shape[0], 1 << start, dtype=np.int64)
        for _ in range(n):
            grown = reach.copy()
            for w in range(n):
                if w == skip:
                    continue
                grown |= np.where((reach >> w) & 1 == 1, rows[w], 0)
            reach = grown & alive
        return reach == alive

    keep &= connected_without(None)
    for v in range(n):
        keep &= connected_without(v)
    return codes[keep]
