import numpy as np
import pytest

from chordpack.errors import Infeasible, InvalidS
from chordpack.generators import (
    FamilyParams,
    Xorshift64Star,
    adjacency_rows,
    extremal_g1,
    extremal_g2,
    graph_from_code,
    labeled_graph_codes,
    random_delta2_graph,
    random_graph,
    splitmix64,
)
from chordpack.graph import complete, delta_2
from chordpack.graph6 import serialize_graph6


def reference_stream(seed, count):
    """xorshift64* seeded by one splitmix64 step, in numpy uint64 arithmetic."""
    with np.errstate(over="ignore"):
        z = np.uint64(seed) + np.uint64(0x9E3779B97F4A7C15)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        x = z ^ (z >> np.uint64(31))
        out = []
        for _ in range(count):
            x ^= x >> np.uint64(12)
            x ^= x << np.uint64(25)
            x ^= x >> np.uint64(27)
            out.append(int(x * np.uint64(0x2545F4914F6CDD1D)))
    return out


@pytest.mark.parametrize("seed", [0, 1, 42, 2**63 + 5, 2**64 - 1])
def test_prng_matches_reference(seed):
    rng = Xorshift64Star(seed)
    assert [rng.next_u64() for _ in range(64)] == reference_stream(seed, 64)


def test_prng_fixture():
    rng = Xorshift64Star(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0x7BBCB40D550682D0,
        0xDE7FE413D00CC9FD,
        0xB3C638353C668C91,
    ]


def test_splitmix_state_advances_by_golden_gamma():
    state, _ = splitmix64(0)
    assert state == 0x9E3779B97F4A7C15


def test_below_and_random_ranges():
    rng = Xorshift64Star(9)
    draws = [rng.below(7) for _ in range(2000)]
    assert set(draws) == set(range(7))
    assert all(0.0 <= rng.random() < 1.0 for _ in range(1000))
    with pytest.raises(ValueError):
        rng.below(0)


# -- extremal families ---------------------------------------------------------------


@pytest.mark.parametrize("s", range(2, 9))
def test_family_degrees(s):
    g1, g2 = extremal_g1(s), extremal_g2(s)
    assert g1.n == 4 * s and delta_2(g1) == 4 * s - 2
    assert g2.n == 4 * s + 1 and delta_2(g2) == 4 * s - 1


def test_g1_orders():
    assert extremal_g1(2).n == 8
    assert FamilyParams("G1", 2).cliques == (5, 1)
    assert delta_2(extremal_g1(3)) == 10 and FamilyParams("G1", 3).cliques == (5, 5)
    with pytest.raises(InvalidS):
        extremal_g1(1)
    with pytest.raises(InvalidS):
        FamilyParams("G1", 1)


def test_g2_small():
    g = extremal_g2(1)
    assert (g.n, delta_2(g)) == (5, 3)
    assert FamilyParams("G2", 2).build() == extremal_g2(2)


def test_g1_vertex_order_is_stable():
    # clique vertices first, independent pair last
    g = extremal_g1(2)
    assert not g.has_edge(6, 7)
    assert all(g.has_edge(v, 6) and g.has_edge(v, 7) for v in range(6))
    assert serialize_graph6(g) == serialize_graph6(extremal_g1(2))


# -- random instances --------------------------------------------------------------


@pytest.mark.parametrize("seed", range(20))
def test_random_delta2_meets_bound(seed):
    g = random_delta2_graph(10, 8, seed)
    assert g.is_complete() or delta_2(g) >= 8


def test_random_delta2_is_deterministic():
    assert random_delta2_graph(12, 8, 3) == random_delta2_graph(12, 8, 3)
    assert random_graph(10, 0.5, 1) == random_graph(10, 0.5, 1)


def test_random_delta2_infeasible_bound():
    assert random_delta2_graph(6, 5, 1) == complete(6)
    with pytest.raises(Infeasible):
        random_delta2_graph(6, 5, 1, allow_complete=False)


# -- labeled enumeration -------------------------------------------------------------


def test_vectorised_rows_match_scalar_decode():
    codes = labeled_graph_codes(5)
    assert codes.shape == (1024,)
    rows = adjacency_rows(5, codes)
    for code in (0, 1, 77, 513, 1023):
        g = graph_from_code(5, code)
        assert tuple(int(r[code]) for r in rows) == g.rows
