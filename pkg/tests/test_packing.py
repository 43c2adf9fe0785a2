import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordpack.cycles import ChordedCycle
from chordpack.errors import InvariantViolation, PathTooShort, PreconditionViolated
from chordpack.generators import extremal_g1, extremal_g2, random_delta2_graph, random_graph
from chordpack.graph import Graph, complete, cycle, disjoint_union, wheel
from chordpack.oracle import chorded_set_table
from chordpack.oracle import minimal_chorded_sets as oracle_minimal
from chordpack.oracle import oracle_pack_exists
from chordpack.packing import (
    THEOREM_VIOLATION,
    BudgetExhausted,
    Len4,
    Len5Pattern,
    Len6TriangleFree,
    NotFoundProven,
    RSystem,
    Witness,
    check_minimality,
    degree3_classify,
    exact_min_system,
    minimal_chorded_sets,
    optimal_system,
    pack_chorded_cycles,
    path_inequalities,
    six_cycle_swap,
    theorem_hypotheses,
)
from chordpack.structure import has_hamiltonian_path, is_two_connected


@st.composite
def graphs(draw, min_n=4, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


def brute_min_total(g, r):
    """Least total order of r disjoint chorded vertex sets, from the oracle's table."""
    sets = oracle_minimal(chorded_set_table(g), g.n)
    best = None
    for combo in itertools.combinations(sets, r):
        union = 0
        ok = True
        for m in combo:
            if union & m:
                ok = False
                break
            union |= m
        if ok:
            total = union.bit_count()
            best = total if best is None else min(best, total)
    return best


def cyc(g, seq):
    return ChordedCycle.from_sequence(g, seq)


def six_cycle_host(chord=(0, 3)):
    """C6 on 0..5 with one chord, u=6 seeing 0, 2, 4 and v=7 seeing 1, 3."""
    edges = [(i, (i + 1) % 6) for i in range(6)] + [chord, (6, 0), (6, 2), (6, 4), (7, 1), (7, 3)]
    return Graph.from_edges(8, edges)


# -- minimal chorded sets ----------------------------------------------------------


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10))
def test_minimal_sets_match_oracle(g):
    ours = [c.mask for c in minimal_chorded_sets(g)]
    assert sorted(ours) == sorted(oracle_minimal(chorded_set_table(g), g.n))
    for c in minimal_chorded_sets(g):
        c.validate(g)


# -- exact and optimal systems ---------------------------------------------------


def test_exact_min_examples():
    assert exact_min_system(complete(8), 2).total_vertices == 8
    assert exact_min_system(cycle(7), 1) is None
    assert exact_min_system(wheel(7), 1).total_vertices == 4


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=10), st.integers(1, 2))
def test_exact_min_total_matches_brute_force(g, r):
    sys = exact_min_system(g, r)
    expected = brute_min_total(g, r)
    if expected is None:
        assert sys is None
    else:
        assert sys.total_vertices == expected
        assert len(sys) == r
        assert check_minimality(g, sys)


def test_optimal_examples():
    assert optimal_system(complete(8), 2).metrics().remainder_max_component == 0
    two_k4 = disjoint_union(complete(4), complete(4)).with_edge(3, 4)
    m = optimal_system(two_k4, 1).metrics()
    assert (m.total_vertices, m.remainder_max_component) == (4, 4)
    m = optimal_system(extremal_g2(2), 1).metrics()
    assert (m.total_vertices, m.remainder_max_component) == (4, 5)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9))
def test_optimal_maximises_remainder_among_minimum_systems(g):
    opt = optimal_system(g, 1)
    if opt is None:
        return
    best_total = opt.total_vertices
    best_r = 0
    for c in minimal_chorded_sets(g):
        if c.length == best_total:
            sys = RSystem((c,), g)
            best_r = max(best_r, sys.metrics().remainder_max_component)
    m = opt.metrics()
    assert m.remainder_max_component == best_r
    if m.remainder_max_component:
        assert m.remainder_max_path_len <= m.remainder_max_component - 1


def test_check_minimality_examples():
    k8 = complete(8)
    assert not check_minimality(k8, RSystem((cyc(k8, range(6)),), k8))
    two = RSystem((cyc(k8, range(4)), cyc(k8, range(4, 8))), k8)
    assert check_minimality(k8, two)


def test_rsystem_rejects_overlap():
    k8 = complete(8)
    with pytest.raises(InvariantViolation):
        RSystem((cyc(k8, range(4)), cyc(k8, range(3, 7))), k8)


# -- degree-3 shapes ---------------------------------------------------------------


def test_len4_shape():
    g = complete(5)
    c = cyc(g, range(4))
    assert degree3_classify(g, RSystem((c,), g), c, 4) == Len4(4)


def test_len5_shape():
    g = Graph.from_edges(6, [(i, (i + 1) % 5) for i in range(5)] + [(1, 4), (5, 0), (5, 2), (5, 3)])
    c = cyc(g, range(5))
    sys = RSystem((c,), g)
    assert check_minimality(g, sys)
    assert degree3_classify(g, sys, c, 5) == Len5Pattern(0, (2, 3))


def test_len6_shape():
    g = six_cycle_host()
    c = cyc(g, range(6))
    sys = RSystem((c,), g)
    assert check_minimality(g, sys)
    assert degree3_classify(g, sys, c, 6) == Len6TriangleFree((0, 2, 4))


def test_degree3_preconditions():
    g = complete(5)
    c = cyc(g, range(4))
    sys = RSystem((c,), g)
    with pytest.raises(PreconditionViolated):
        degree3_classify(g, sys, c, 0)
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (4, 0)])
    c = cyc(g, range(4))
    with pytest.raises(PreconditionViolated):
        degree3_classify(g, RSystem((c,), g), c, 4)


# -- six-cycle exchange -------------------------------------------------------------


def test_swap_with_chord_u1u4():
    g = six_cycle_host((0, 3))
    c = cyc(g, range(6))
    sys = RSystem((c,), g)
    assert check_minimality(g, sys)
    res = six_cycle_swap(g, sys, c, 6, 7)
    assert res.v_prime == 1
    assert res.c_u.vertex_set == {6, 0, 5, 4, 3, 2}
    assert (4, 6) in res.c_u.chords
    assert res.c_v.vertex_set == {7, 1, 0, 5, 4, 3}
    for cc in (res.c_u, res.c_v):
        cc.validate(g)
    assert res.u_prime not in res.c_v.vertex_set and res.v_prime not in res.c_u.vertex_set


def test_swap_with_chord_u3u6():
    g = six_cycle_host((2, 5))
    c = cyc(g, range(6))
    sys = RSystem((c,), g)
    res = six_cycle_swap(g, sys, c, 6, 7)
    assert res.u_prime == 0
    assert res.c_v.vertex_set == {7, 1, 2, 5, 4, 3}
    assert (2, 3) in res.c_v.chords
    res.c_u.validate(g)
    res.c_v.validate(g)


def test_swap_on_five_cycle_is_inconsistent():
    g = Graph.from_edges(7, [(i, (i + 1) % 5) for i in range(5)] + [(0, 2), (5, 0), (5, 1), (5, 2), (6, 3), (6, 4)])
    c = cyc(g, range(5))
    with pytest.raises(PreconditionViolated):
        six_cycle_swap(g, RSystem((c,), g), c, 5, 6)


def test_swap_needs_distinct_vertices():
    g = six_cycle_host()
    c = cyc(g, range(6))
    sys = RSystem((c,), g)
    with pytest.raises(PreconditionViolated):
        six_cycle_swap(g, sys, c, 6, 6)


# -- path inequalities ----------------------------------------------------------------


def test_four_cycle_bounds_are_automatic():
    g = disjoint_union(complete(4), Graph.from_edges(5, [(i, i + 1) for i in range(4)]))
    for v in range(4, 9):
        for w in range(4):
            g = g.with_edge(v, w)
    c = cyc(g, range(4))
    sys = RSystem((c,), g)
    assert path_inequalities(g, sys, c, [4, 5, 6, 7, 8]) == (True, True, True)


def test_non_minimal_system_breaks_a_bound():
    edges = [(i, (i + 1) % 6) for i in range(6)] + [(0, 3)]
    edges += [(6 + i, 7 + i) for i in range(4)]
    edges += [(x, w) for x in (6, 7) for w in range(6)]
    g = Graph.from_edges(11, edges)
    c = cyc(g, range(6))
    sys = RSystem((c,), g)
    assert not check_minimality(g, sys)
    assert False in path_inequalities(g, sys, c, [6, 7, 8, 9, 10])


def test_short_path_rejected():
    g = complete(8)
    c = cyc(g, range(4))
    with pytest.raises(PathTooShort):
        path_inequalities(g, RSystem((c,), g), c, [4, 5, 6])


# -- packer ------------------------------------------------------------------------


def test_pack_examples():
    out = pack_chorded_cycles(complete(8), 2)
    assert isinstance(out, Witness) and all(c.length == 4 for c in out.system.cycles)
    out = pack_chorded_cycles(extremal_g2(2), 2)
    assert isinstance(out, Witness) and len(out.system) == 2
    out = pack_chorded_cycles(extremal_g1(2), 2)
    assert isinstance(out, NotFoundProven) and not out.flags


def test_pack_order_bound_and_budget():
    assert pack_chorded_cycles(complete(7), 2).strategy == "order_bound"
    out = pack_chorded_cycles(extremal_g1(2), 2, budget=1)
    assert isinstance(out, BudgetExhausted)


def test_theorem_hypotheses():
    h = theorem_hypotheses(complete(8), 2)
    assert h["holds"] and h["complete"]
    h = theorem_hypotheses(extremal_g1(2), 2)
    assert not h["holds"] and h["delta2"] == 6


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=10), st.integers(1, 2))
def test_pack_agrees_with_oracle(g, s):
    out = pack_chorded_cycles(g, s)
    exists, _ = oracle_pack_exists(g, s)
    assert not isinstance(out, BudgetExhausted)
    assert out.found == exists
    if out.found:
        assert len(out.system) == s
        for c in out.system.cycles:
            c.validate(g)
    assert THEOREM_VIOLATION not in out.flags


# -- desk-scale proof claims ----------------------------------------------------------


def hypothesis_instances(count):
    out = []
    seed = 0
    while len(out) < count:
        n = 11 + seed % 2
        g = random_delta2_graph(n, 8, seed)
        seed += 1
        if is_two_connected(g) and not g.is_complete():
            out.append(g)
    return out


@pytest.mark.parametrize("g", hypothesis_instances(12))
def test_remainder_components_see_little_of_the_cycle(g):
    sys = optimal_system(g, 1)
    c = sys.cycles[0]
    comps = g.component_masks(sys.remainder_mask)
    top = max(m.bit_count() for m in comps)
    for big in [m for m in comps if m.bit_count() == top]:
        for other in comps:
            if other == big:
                continue
            for u in range(g.n):
                if not big >> u & 1:
                    continue
                for v in range(g.n):
                    if other >> v & 1:
                        union = ((g.rows[u] | g.rows[v]) & c.mask).bit_count()
                        assert union <= 4


@pytest.mark.parametrize("g", hypothesis_instances(12))
def test_order4_remainder_components_have_no_hamiltonian_path(g):
    sys = optimal_system(g, 1)
    packed = pack_chorded_cycles(g, 2).found
    for comp in g.component_masks(sys.remainder_mask):
        if comp.bit_count() == 4:
            verts = [v for v in range(g.n) if comp >> v & 1]
            assert not has_hamiltonian_path(g, verts) or packed


def test_random_graph_is_seeded():
    assert random_graph(9, 0.4, 3) == random_graph(9, 0.4, 3)
