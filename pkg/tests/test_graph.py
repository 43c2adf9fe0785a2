import itertools
import math

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordpack.errors import CapacityExceeded, EmptyQuerySet, InvalidOrder, MalformedGraph6
from chordpack.generators import extremal_g2
from chordpack.graph import (
    INFINITE,
    Graph,
    complete,
    cycle,
    delta_2,
    delta_m,
    disjoint_union,
    empty,
    induced,
    join,
    min_degree,
    neighborhood_union,
    path,
    petersen,
    require_exact,
    restricted_degree,
    sigma_m,
)
from chordpack.graph6 import parse_graph6, read_graph6, serialize_graph6


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


def brute_union(g, verts):
    out = set()
    for v in verts:
        out |= {w for w in range(g.n) if g.has_edge(v, w)}
    return out


# -- construction ------------------------------------------------------------


def test_join_example_has_22_edges():
    g = join(disjoint_union(complete(5), complete(1)), empty(2))
    assert g.n == 8
    assert g.edge_count == 22


def test_induced_relabels_with_map():
    h, mapping = induced(complete(4), {0, 1, 2})
    assert h == complete(3)
    assert mapping == {0: 0, 1: 1, 2: 2}
    h, mapping = induced(cycle(6), [5, 1, 0])
    assert mapping == {0: 0, 1: 1, 5: 2}
    assert h.edges() == [(0, 1), (0, 2)]


def test_cycle_of_two_is_invalid():
    with pytest.raises(InvalidOrder):
        cycle(2)


def test_rows_are_symmetric_and_loop_free():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0b00])
    with pytest.raises(ValueError):
        Graph(1, [0b1])


def test_exact_cap():
    require_exact(empty(64))
    with pytest.raises(CapacityExceeded):
        require_exact(empty(65))


# -- neighbourhood functionals -------------------------------------------------


@pytest.mark.parametrize(
    "g, s, expected",
    [
        (path(3), {0, 2}, {1}),
        (complete(4), {0}, {1, 2, 3}),
        (cycle(6), {0, 3}, {1, 5, 2, 4}),
    ],
)
def test_neighborhood_union_examples(g, s, expected):
    assert neighborhood_union(g, s) == frozenset(expected)


def test_restricted_degree_is_a_union():
    assert restricted_degree(complete(4), {0, 1}, {2}) == 2
    assert restricted_degree(cycle(6), range(6), {0, 3}) == 4
    assert restricted_degree(complete(4), {2, 3}, {0, 1}) == 2


def test_restricted_degree_rejects_empty_query():
    with pytest.raises(EmptyQuerySet):
        restricted_degree(complete(3), {0}, set())


def test_delta2_examples():
    assert delta_2(cycle(5)) == 3
    assert delta_2(complete(6)) == INFINITE
    assert delta_2(extremal_g2(2)) == 7
    assert delta_2(petersen()) == 5


def test_sigma_examples():
    assert sigma_m(cycle(5), 2) == 4
    assert sigma_m(complete(4), 2) == INFINITE


@settings(max_examples=200)
@given(graphs(max_n=8))
def test_delta2_matches_pair_scan(g):
    best = math.inf
    for u, v in itertools.combinations(range(g.n), 2):
        if not g.has_edge(u, v):
            best = min(best, len(brute_union(g, {u, v})))
    assert delta_2(g) == best
    assert delta_m(g, 2) == best


@settings(max_examples=200)
@given(graphs(max_n=8), st.integers(1, 3))
def test_delta_and_sigma_m_match_brute_force(g, m):
    best_d = best_s = math.inf
    for s in itertools.combinations(range(g.n), m):
        if any(g.has_edge(a, b) for a, b in itertools.combinations(s, 2)):
            continue
        best_d = min(best_d, len(brute_union(g, s)))
        best_s = min(best_s, sum(g.degree(v) for v in s))
    assert delta_m(g, m) == best_d
    assert sigma_m(g, m) == best_s


@settings(max_examples=300)
@given(graphs(min_n=1, max_n=10))
def test_sigma1_is_min_degree(g):
    assert sigma_m(g, 1) == delta_m(g, 1) == min_degree(g)


# -- graph6 ----------------------------------------------------------------


def test_graph6_examples():
    assert parse_graph6("C~") == complete(4)
    assert parse_graph6("D??") == empty(5)
    assert serialize_graph6(complete(4)) == "C~"
    assert serialize_graph6(empty(1)) == "@"
    assert parse_graph6(">>graph6<<C~\n") == complete(4)


@pytest.mark.parametrize("text", ["C", "C~~", "C\x7f", "", "~?"])
def test_graph6_malformed(text):
    with pytest.raises(MalformedGraph6):
        parse_graph6(text)


def test_graph6_padding_bits_must_be_zero():
    # n=2 has one data bit; "A_" sets it, "A@" sets a padding bit
    assert parse_graph6("A_").edges() == [(0, 1)]
    with pytest.raises(MalformedGraph6):
        parse_graph6("A@")


@settings(max_examples=300)
@given(graphs(max_n=70))
def test_graph6_round_trip_and_matches_networkx(g):
    text = serialize_graph6(g)
    assert parse_graph6(text) == g
    expected = nx.to_graph6_bytes(g.to_networkx(), header=False).decode().strip()
    assert text == expected


def test_read_graph6_skips_blank_lines():
    out = list(read_graph6(["C~\n", "\n", "D??\n"]))
    assert out == [complete(4), empty(5)]
