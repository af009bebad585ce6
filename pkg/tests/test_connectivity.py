import networkx as nx

from minorkit.connectivity import (
    enumerate_3_separations,
    has_cubic_vertex_in_triangle,
    is_internally_4_connected,
    is_k_connected,
    is_quasi_4_connected,
    vertex_connectivity,
)
from minorkit.families import (
    aw,
    aw_plus,
    complete,
    cycle,
    cycle_sq,
    dw_plus,
    k33,
    k33_ij,
    ladder,
    petersen,
    terrahawk,
    v8_plus_e,
    v8_plus_f,
    wagner,
)
from minorkit.graph import Graph

from helpers import random_3_connected, random_graph, to_nx


def test_vertex_connectivity_examples():
    assert vertex_connectivity(k33()) == 3
    assert vertex_connectivity(cycle_sq(6)) == 4
    assert vertex_connectivity(complete(5)) == 4
    assert vertex_connectivity(petersen()) == 3
    assert vertex_connectivity(cycle(6)) == 2


def test_three_separations():
    assert enumerate_3_separations(complete(5)) == []
    seps = enumerate_3_separations(wagner())
    assert len(seps) == 8
    assert all(min(len(s.interior1), len(s.interior2)) == 1 for s in seps)
    singles = {next(iter(s.interior1 if len(s.interior1) == 1 else s.interior2)) for s in seps}
    assert singles == set(range(8))


def test_quasi_4_connected():
    assert is_quasi_4_connected(wagner())
    assert not is_quasi_4_connected(cycle(6))
    # two K4s glued along a triangle: the only 3-cut leaves one vertex per side
    two_k4 = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3), (0, 4), (1, 4), (2, 4)])
    assert is_k_connected(two_k4, 3)
    assert is_quasi_4_connected(two_k4)
    assert not is_internally_4_connected(two_k4)
    assert not is_quasi_4_connected(ladder(5))


def test_internally_4_connected():
    assert is_internally_4_connected(wagner())
    assert not is_internally_4_connected(k33_ij(1, 0))
    assert is_internally_4_connected(aw_plus(8))
    assert is_internally_4_connected(terrahawk())
    assert is_internally_4_connected(aw(6))
    assert is_internally_4_connected(k33())
    assert is_internally_4_connected(dw_plus(5))
    assert is_internally_4_connected(petersen())


def test_chord_additions_of_wagner_not_i4c():
    # both chords close a triangle through a cubic vertex
    for g in (v8_plus_e(), v8_plus_f()):
        assert has_cubic_vertex_in_triangle(g)
        assert is_quasi_4_connected(g)
        assert not is_internally_4_connected(g)


def test_cubic_vertex_in_triangle():
    assert has_cubic_vertex_in_triangle(complete(4))
    assert not has_cubic_vertex_in_triangle(wagner())
    assert has_cubic_vertex_in_triangle(k33_ij(1, 0))


def test_connectivity_matches_networkx(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 9), rng.uniform(0.2, 0.9))
        assert vertex_connectivity(g) == nx.node_connectivity(to_nx(g))


def test_separation_invariants(rng):
    for _ in range(200):
        g = random_3_connected(rng, rng.randint(6, 9))
        for s in enumerate_3_separations(g):
            assert s.is_valid_for(g)
            assert len(s.cut) == 3


def test_hierarchy(rng):
    corpus = [wagner(), aw_plus(8), terrahawk(), k33(), petersen(), cycle_sq(7)]
    corpus += [random_3_connected(rng, rng.randint(5, 9)) for _ in range(100)]
    for g in corpus:
        if is_internally_4_connected(g):
            assert is_quasi_4_connected(g)
        if is_quasi_4_connected(g):
            assert vertex_connectivity(g) >= 3


def test_addition_lemma(rng):
    # if G + e loses i-4-c then both ends of e see a common cubic vertex
    corpus = [wagner(), aw_plus(8), terrahawk(), k33(), petersen(), cycle_sq(8), aw(8)]
    corpus += [g for g in (random_3_connected(rng, 8) for _ in range(60)) if is_internally_4_connected(g)]
    for g in corpus:
        for u, v in g.non_edges():
            if not is_internally_4_connected(g.add_edge(u, v)):
                common = g.rows[u] & g.rows[v]
                assert any(g.degree(w) == 3 for w in range(g.n) if common >> w & 1)
