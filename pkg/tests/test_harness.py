import itertools
import json

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordpack.generators import extremal_g1, extremal_g2, graph_from_code, labeled_graph_codes
from chordpack.graph import Graph, complete, cycle, delta_2
from chordpack.graph6 import serialize_graph6
from chordpack.harness import (
    check_theorem_instance,
    chorded_free_graphs,
    lemma_suite,
    no_ham_path_domain,
    oracle_pack_exists,
    sweep,
    system_suites,
    theorem_domain_codes,
    two_path_configs,
    validate_witness,
)
from chordpack.oracle import has_chorded_cycle_cyclespace
from chordpack.structure import is_two_connected


@st.composite
def graphs(draw, min_n=4, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, chosen) if keep])


def atlas(max_n):
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= max_n:
            yield Graph.from_edges(h.number_of_nodes(), h.edges())


def traceable(g):
    return any(
        all(g.has_edge(a, b) for a, b in zip(p, p[1:])) for p in itertools.permutations(range(g.n))
    )


# -- oracle --------------------------------------------------------------------


def test_oracle_examples():
    assert oracle_pack_exists(complete(8), 2)[0]
    assert not oracle_pack_exists(extremal_g1(2), 2)[0]
    assert not oracle_pack_exists(cycle(9), 1)[0]


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9))
def test_oracle_single_cycle_matches_cycle_space(g):
    exists, sys = oracle_pack_exists(g, 1)
    assert exists == has_chorded_cycle_cyclespace(g)
    if exists:
        assert not validate_witness(g, [c.to_dict() for c in sys.cycles], 1)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10), st.integers(2, 3))
def test_oracle_is_monotone_in_s(g, s):
    if oracle_pack_exists(g, s)[0]:
        assert oracle_pack_exists(g, s - 1)[0]


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=10), st.integers(1, 2), st.data())
def test_oracle_is_monotone_under_edge_addition(g, s, data):
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if not missing:
        return
    u, v = data.draw(st.sampled_from(missing))
    if oracle_pack_exists(g, s)[0]:
        assert oracle_pack_exists(g.with_edge(u, v), s)[0]


def test_validate_witness_catches_problems():
    g = complete(8)
    good = [{"cycle": [0, 1, 2, 3], "chords": [[0, 2]]}]
    assert validate_witness(g, good, 1) == []
    assert validate_witness(g, good, 2)
    assert validate_witness(g, good + good)
    assert validate_witness(cycle(6), [{"cycle": [0, 1, 2, 3], "chords": [[0, 2]]}])
    assert validate_witness(g, [{"cycle": [0, 1, 2, 3], "chords": [[0, 1]]}])
    assert validate_witness(g, [{"cycle": [0, 1, 2, 3], "chords": []}])


# -- single instances ------------------------------------------------------------


def test_instance_examples():
    assert check_theorem_instance(extremal_g1(2), 2).outcome == "VacuousPass"
    rep = check_theorem_instance(complete(8), 2)
    assert rep.outcome == "Pass" and rep.witness_source == "packer"
    rep = check_theorem_instance(extremal_g2(2), 2)
    assert rep.outcome == "VacuousPass"
    assert rep.witness is not None and rep.notes
    json.dumps(rep.to_dict())


# -- sweeps ----------------------------------------------------------------------


def two_connected_lines(n):
    out = []
    for code in labeled_graph_codes(n):
        g = graph_from_code(n, int(code))
        if is_two_connected(g):
            out.append(serialize_graph6(g))
    return out


def test_sweep_all_two_connected_order_five():
    lines = two_connected_lines(5)
    summary = sweep(lines, 1, keep_outcomes=False)
    assert summary.total == len(lines) > 0
    assert summary.counts.get("TheoremViolation", 0) == 0
    assert summary.counts.get("OracleDisagreement", 0) == 0
    assert summary.exit_code() == 0


def test_empty_stream():
    summary = sweep([], 2)
    assert summary.total == 0 and summary.counts == {}
    assert summary.to_dict()["totals"] == {"total": 0}


def test_sweep_reports_parse_errors_and_is_schedule_independent():
    lines = [serialize_graph6(extremal_g2(2)), "C", "", serialize_graph6(complete(8))]
    one = sweep(lines, 2, jobs=1)
    two = sweep(lines, 2, jobs=2)
    assert one.counts["ParseError"] == 1 and one.total == 3
    a, b = one.to_dict(), two.to_dict()
    a.pop("config"), b.pop("config")
    assert a == b
    assert a["timing"] == {"wall_seconds": None}


def test_boundary_hunt_on_packable_family():
    lines = [serialize_graph6(extremal_g2(s)) for s in (1, 2)] + [serialize_graph6(complete(8))]
    summary = sweep(lines, 2, mode="hunt_boundary")
    assert summary.counts["Candidate"] == 1
    assert summary.boundary_witnesses == []


def test_boundary_witness_is_recorded():
    # long cycles sit at delta_2 = 3 = 4s - 1 for s = 1 and have no chord
    lines = [serialize_graph6(cycle(k)) for k in (4, 5, 6)]
    summary = sweep(lines, 1, mode="hunt_boundary")
    assert summary.counts["Skipped"] == 1
    assert [w["line"] for w in summary.boundary_witnesses] == [1, 2]
    assert all(w["tag"] == "BOUNDARY_WITNESS" for w in summary.boundary_witnesses)
    assert summary.exit_code() == 2


# -- exhaustive domains ---------------------------------------------------------


def test_chorded_free_classes_match_atlas():
    ours = chorded_free_graphs(7)
    expected = {}
    for g in atlas(7):
        if not has_chorded_cycle_cyclespace(g):
            expected[g.n] = expected.get(g.n, 0) + 1
    assert {n: len(gs) for n, gs in ours.items()} == expected


def test_no_ham_path_domain_matches_atlas():
    ours = no_ham_path_domain(7)
    expected = [
        g
        for g in atlas(7)
        if g.n >= 4 and g.is_connected() and not has_chorded_cycle_cyclespace(g) and not traceable(g)
    ]
    assert len(ours) == len(expected) == 73


def test_two_path_config_count():
    # p = q = 1: one pair, zero or one cross edge
    assert len(list(two_path_configs(1, 1, 6))) == 2
    assert len(list(two_path_configs(2, 2, 6))) == 2 + 4 + 4 + 16


@pytest.mark.parametrize("n", [4, 5, 6])
def test_theorem_domain_matches_scalar_filter(n):
    ours = set(int(c) for c in theorem_domain_codes(n))
    expected = set()
    for code in labeled_graph_codes(n):
        g = graph_from_code(n, int(code))
        if is_two_connected(g) and (g.is_complete() or delta_2(g) >= 4):
            expected.add(int(code))
    assert ours == expected


# -- lemma suites -----------------------------------------------------------------


def test_small_suites_are_clean():
    assert lemma_suite("two_path", 3).violations == []
    assert lemma_suite("degree2", 6).violations == []
    assert lemma_suite("v2", 6).violations == []


def test_system_suites_small_and_negative_control():
    clean = system_suites(["c_mini", "five_path", "degree3", "six_cycle"], 10, seed=1, instances=40)
    for summary in clean.values():
        assert summary.violations == [] and summary.total == 40
    dirty = system_suites(["c_mini", "five_path"], 10, seed=1, instances=5, corrupt=True)
    assert all(summary.violations for summary in dirty.values())
    assert dirty["five_path"].exit_code() == 2


def test_unknown_scope():
    with pytest.raises(ValueError):
        lemma_suite("nonsense", 3)
