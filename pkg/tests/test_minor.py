import networkx as nx
import pytest

from minorkit.families import (
    aw,
    complete,
    cube,
    cycle,
    cycle_sq,
    dw_plus,
    k33,
    line_graph,
    label_edge,
    display_labels,
    petersen,
    terrahawk,
    v8_plus_e,
    v8_plus_f,
    wagner,
)
from minorkit.graph import Graph, GraphError
from minorkit.minor import (
    MinorEmbedding,
    find_minor,
    forbidden_edges,
    has_minor,
    has_minor_oracle,
    is_planar,
    verify_embedding,
)

from helpers import random_graph, to_nx


def test_find_minor_examples():
    emb = find_minor(v8_plus_e(), wagner())
    assert emb is not None and verify_embedding(v8_plus_e(), wagner(), emb)
    assert find_minor(terrahawk(), v8_plus_e()) is None
    emb = find_minor(petersen(), v8_plus_f())
    assert emb is not None and verify_embedding(petersen(), v8_plus_f(), emb)


def test_has_minor_examples():
    assert not has_minor(aw(8), v8_plus_e())
    assert not has_minor(line_graph(k33()), wagner())
    assert has_minor(complete(5), complete(5))
    assert not has_minor(complete(4), complete(5))


def test_oracle_examples():
    assert not has_minor_oracle(complete(4), complete(5))
    assert has_minor_oracle(cube(), cycle(4))
    with pytest.raises(GraphError):
        has_minor_oracle(petersen(), complete(4))


def test_embedding_rejections():
    host = cycle(4)
    wit = {(0, 1): (0, 1), (0, 2): (0, 3), (1, 2): (1, 2)}
    good = MinorEmbedding({0: frozenset({0}), 1: frozenset({1}), 2: frozenset({2, 3})}, wit)
    assert verify_embedding(host, complete(3), good)
    overlap = MinorEmbedding({0: frozenset({0, 1}), 1: frozenset({1}), 2: frozenset({2, 3})}, wit)
    assert not verify_embedding(host, complete(3), overlap)
    split = MinorEmbedding({0: frozenset({0, 2}), 1: frozenset({1}), 2: frozenset({3})}, wit)
    assert not verify_embedding(host, complete(3), split)
    no_witness = MinorEmbedding(good.branch_sets, {(0, 1): (0, 1), (0, 2): (0, 3)})
    assert not verify_embedding(host, complete(3), no_witness)
    missing = MinorEmbedding({0: frozenset({0})}, {})
    assert not verify_embedding(host, complete(2), missing)


def test_embedding_json_round_trip():
    emb = find_minor(petersen(), complete(5).delete_edge(0, 1))
    assert emb is not None
    back = MinorEmbedding.from_json(emb.to_json())
    assert back == emb


def test_planarity():
    assert is_planar(aw(10))
    assert not is_planar(dw_plus(4))
    assert is_planar(cycle_sq(8))
    assert not is_planar(petersen())
    assert not is_planar(k33())


def test_planarity_matches_networkx(rng):
    for _ in range(150):
        g = random_graph(rng, rng.randint(5, 9), rng.uniform(0.3, 0.7))
        assert is_planar(g) == nx.check_planarity(to_nx(g))[0]


def test_forbidden_edge_tables():
    c8 = cycle_sq(8)
    labels = display_labels("c2", 8)
    got = set(forbidden_edges(c8, v8_plus_e()).edges)
    want = {tuple(sorted(label_edge(labels, t))) for t in ("14", "16", "27", "25", "36", "38", "47", "58")}
    assert want <= got
    labels = display_labels("wagner")
    fes = forbidden_edges(wagner(), v8_plus_e())
    want = {tuple(sorted(label_edge(labels, t))) for t in ("14", "25", "36", "47", "58", "61", "72", "83")}
    assert want <= set(fes.edges)
    for e in fes.edges:
        assert verify_embedding(wagner().add_edge(*e), v8_plus_e(), fes.certificates[e])
    assert forbidden_edges(complete(6), v8_plus_e()).edges == ()


def test_oracle_agreement_sample(rng):
    for _ in range(400):
        h = random_graph(rng, rng.randint(1, 7), rng.random())
        p = random_graph(rng, rng.randint(1, 5), rng.random())
        assert has_minor(h, p) == has_minor_oracle(h, p)


def test_monotone_under_deletion_and_contraction(rng):
    # a minor of G + e (or of a split) is still a minor of the larger graph
    patterns = [complete(4), k33(), complete(5), wagner()]
    for _ in range(200):
        g = random_graph(rng, rng.randint(6, 9), rng.uniform(0.3, 0.8))
        p = patterns[rng.randrange(len(patterns))]
        edges = list(g.edges())
        if not edges:
            continue
        u, v = edges[rng.randrange(len(edges))]
        if has_minor(g.delete_edge(u, v), p) or has_minor(g.contract_edge(u, v), p):
            assert has_minor(g, p)
        if not has_minor(g, p):
            assert not has_minor(g.delete_edge(u, v), p)
            assert not has_minor(g.contract_edge(u, v), p)


def test_witness_soundness(rng):
    patterns = [complete(4), k33(), complete(5), cycle(5), wagner()]
    for _ in range(150):
        g = random_graph(rng, rng.randint(5, 10), rng.uniform(0.3, 0.9))
        for p in patterns:
            emb = find_minor(g, p)
            if emb is not None:
                assert verify_embedding(g, p, emb)


def test_disconnected_pattern():
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert has_minor(petersen(), Graph.empty(10))
    assert not has_minor(complete(5), two_triangles)
    assert has_minor(cycle_sq(8), two_triangles)
