import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordpack.chorded import (
    AllTriangleLeafBlocks,
    Found,
    NotFound,
    chorded_from_triangle,
    chorded_via_good_ear,
    cycle_with_chords,
    find_chorded_2connected,
    leaf_block_analysis,
)
from chordpack.cycles import ChordedCycle, Cycle, Path, canonical_cycle, chorded_cycles_of_length, find_chorded_cycle
from chordpack.errors import InvariantViolation, PreconditionViolated
from chordpack.graph import INFINITE, Graph, complete, cycle, delta_2, disjoint_union, petersen, wheel
from chordpack.oracle import has_chorded_cycle_cyclespace
from chordpack.structure import Ear, is_two_connected
from chordpack.twopath import (
    TEMPLATES,
    NoChordedFewEdges,
    NoChordedTemplate,
    Chorded,
    TwoPathConfig,
    match_template,
    two_path_analyze,
)


@st.composite
def graphs(draw, min_n=1, max_n=8, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


def min_chorded_length_nx(g):
    """Shortest chorded cycle length via networkx cycle enumeration, or None."""
    edges = set(g.edges())
    best = None
    for cyc in nx.simple_cycles(g.to_networkx()):
        k = len(cyc)
        if k < 4 or (best is not None and k >= best):
            continue
        inside = sum(1 for a, b in itertools.combinations(sorted(cyc), 2) if (a, b) in edges)
        if inside > k:
            best = k
    return best


# -- chorded cycles ------------------------------------------------------------


def test_k4_witness():
    w = find_chorded_cycle(complete(4))
    assert w.cycle == (0, 1, 2, 3)
    assert (0, 2) in w.chords


def test_plain_cycle_has_none():
    assert find_chorded_cycle(cycle(7)) is None


def test_petersen_needs_length_at_least_eight():
    w = find_chorded_cycle(petersen())
    w.validate(petersen())
    assert w.length >= 8
    assert find_chorded_cycle(petersen(), max_len=7) is None


def test_chorded_cycle_validation_errors():
    g = complete(4)
    with pytest.raises(InvariantViolation):
        ChordedCycle.from_sequence(cycle(4), [0, 1, 2, 3])
    with pytest.raises(InvariantViolation):
        ChordedCycle((0, 1, 2, 3), frozenset({(0, 1)})).validate(g)
    assert canonical_cycle([2, 1, 0, 3]) == (0, 1, 2, 3)


@settings(max_examples=250, deadline=None)
@given(graphs(max_n=8))
def test_find_chorded_is_minimum_length(g):
    w = find_chorded_cycle(g)
    expected = min_chorded_length_nx(g)
    if expected is None:
        assert w is None
        assert not has_chorded_cycle_cyclespace(g)
    else:
        w.validate(g)
        assert w.length == expected
        assert has_chorded_cycle_cyclespace(g)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=4, max_n=7), st.integers(4, 7))
def test_length_enumeration_matches_networkx(g, length):
    ours = {c.cycle for c in chorded_cycles_of_length(g, length)}
    edges = set(g.edges())
    theirs = set()
    for cyc in nx.simple_cycles(g.to_networkx(), length_bound=length):
        if len(cyc) == length:
            inside = sum(1 for a, b in itertools.combinations(sorted(cyc), 2) if (a, b) in edges)
            if inside > length:
                theirs.add(canonical_cycle(cyc))
    assert ours == theirs


# -- two-path configurations -----------------------------------------------------


def test_two_path_examples():
    assert two_path_analyze(TwoPathConfig(3, 2, {(1, 1), (3, 1), (2, 2)})) == NoChordedTemplate("F1a")
    assert two_path_analyze(TwoPathConfig(5, 5, {(1, 1)})) == NoChordedFewEdges()


def test_five_cross_edges_always_chorded():
    for cross in [{(1, 1), (2, 2), (3, 3), (1, 3), (3, 1)}, {(1, 1), (1, 2), (1, 3), (2, 1), (3, 1)}]:
        out = two_path_analyze(TwoPathConfig(3, 3, cross))
        assert isinstance(out, Chorded)
        out.witness.validate(TwoPathConfig(3, 3, cross).realize())


def test_every_template_realises_a_chorded_free_graph():
    for tpl in TEMPLATES:
        p = max(i for i, _ in tpl.pattern)
        q = max(j for _, j in tpl.pattern)
        if tpl.middle_gaps:
            # stretch so the middle endpoints sit two apart on both paths
            remap = {1: 1, 2: 2, 3: 4, 4: 5}
            pattern = [(remap[i], remap[j]) for i, j in tpl.pattern]
            p, q = 5, 5
        else:
            pattern = tpl.pattern
        cfg = TwoPathConfig(p, q, pattern)
        assert match_template(cfg) is not None
        assert not has_chorded_cycle_cyclespace(cfg.realize())


@pytest.mark.parametrize("p,q", [(a, b) for a in range(1, 4) for b in range(1, 4)])
def test_two_path_equivalence_small(p, q):
    pairs = [(i, j) for i in range(1, p + 1) for j in range(1, q + 1)]
    for k in range(min(len(pairs), 6) + 1):
        for cross in itertools.combinations(pairs, k):
            cfg = TwoPathConfig(p, q, cross)
            verdict = two_path_analyze(cfg)
            assert isinstance(verdict, Chorded) == has_chorded_cycle_cyclespace(cfg.realize())
            if k in (3, 4) and not isinstance(verdict, Chorded):
                assert isinstance(verdict, NoChordedTemplate)


def test_two_path_config_rejects_bad_pairs():
    with pytest.raises(ValueError):
        TwoPathConfig(2, 2, {(3, 1)})
    with pytest.raises(ValueError):
        TwoPathConfig(0, 2, set())


# -- triangle route ----------------------------------------------------------------


def test_triangle_route_examples():
    w = chorded_from_triangle(complete(4))
    assert w.length == 4
    g = wheel(6)
    w = chorded_from_triangle(g)
    w.validate(g)
    assert 0 in w.cycle


def test_triangle_route_skips_triangle_free_hosts():
    g = cycle(6).with_edge(0, 3)
    assert chorded_from_triangle(g) is None
    assert find_chorded_cycle(g) is not None


def test_triangle_route_precondition():
    with pytest.raises(PreconditionViolated):
        chorded_from_triangle(disjoint_union(complete(3), complete(3)))


# -- good-ear route ---------------------------------------------------------------


def test_length1_ear_returns_the_cycle():
    g = cycle(6).with_edge(0, 3)
    c = Cycle(tuple(range(6)))
    w = chorded_via_good_ear(g, c, Ear(Path((0, 3))))
    assert w.cycle == c.vertices and w.chords == {(0, 3)}


def test_theta_graph_gives_nothing():
    # C8 plus a length-3 ear 0-8-9-4: three internally disjoint paths, no chord anywhere
    g = Graph.from_edges(10, [(i, (i + 1) % 8) for i in range(8)] + [(0, 8), (8, 9), (9, 4)])
    assert find_chorded_cycle(g) is None
    c = Cycle(tuple(range(8)))
    assert chorded_via_good_ear(g, c, Ear(Path((0, 8, 9, 4)))) is None


# -- 2-connected search and leaf blocks -------------------------------------------------


def test_find_chorded_2connected_examples():
    assert isinstance(find_chorded_2connected(complete(4)), Found)
    assert isinstance(find_chorded_2connected(cycle(6)), NotFound)
    assert delta_2(petersen()) == 5
    res = find_chorded_2connected(petersen())
    assert isinstance(res, Found)
    res.cycle.validate(petersen())


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=4, max_n=8))
def test_2connected_search_matches_exhaustive(g):
    if not is_two_connected(g):
        return
    res = find_chorded_2connected(g)
    if isinstance(res, Found):
        res.cycle.validate(g)
    assert isinstance(res, Found) == has_chorded_cycle_cyclespace(g)
    if g.is_complete() or delta_2(g) >= 4:
        assert isinstance(res, Found)


def test_k5_with_pendant_triangle():
    g = disjoint_union(complete(5), complete(2))
    g = g.with_edge(4, 5).with_edge(4, 6)
    if delta_2(g) < 4:
        pytest.skip("construction below the degree bound")
    res = leaf_block_analysis(g)
    assert isinstance(res, Found)
    res.cycle.validate(g)
    assert res.cycle.vertex_set <= set(range(5))


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=4, max_n=9))
def test_leaf_blocks(g):
    if not g.is_connected() or (not g.is_complete() and delta_2(g) < 4):
        return
    res = leaf_block_analysis(g)
    if isinstance(res, Found):
        res.cycle.validate(g)
    else:
        assert isinstance(res, AllTriangleLeafBlocks)
        assert res.blocks and all(len(b) == 3 for b in res.blocks)


def test_cycle_with_chords_helper():
    assert cycle_with_chords(complete(4), [0, 1, 2, 3]) is not None
    assert cycle_with_chords(cycle(4), [0, 1, 2, 3]) is None
    assert cycle_with_chords(complete(4), [0, 1, 2]) is None
    assert delta_2(complete(3)) == INFINITE
