import random

import networkx as nx

from minorkit.graph import Graph

# one line per acceptance criterion, printed at the end of the session
ACCEPTANCE_LINES: list[str] = []


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_3_connected(rng: random.Random, n: int) -> Graph:
    while True:
        g = random_graph(rng, n, rng.uniform(0.35, 0.8))
        if nx.node_connectivity(to_nx(g)) >= 3:
            return g


def contains_one_larger(g: Graph, pattern: Graph) -> bool:
    """Minor test by networkx monomorphism, valid when |g| = |pattern| + 1.

    A connected pattern on one vertex fewer is a minor exactly when it is a
    subgraph of some single vertex deletion or single edge contraction.
    """
    from networkx.algorithms.isomorphism import GraphMatcher

    assert g.n == pattern.n + 1
    target = to_nx(pattern)
    cands = [g.delete_vertex(v) for v in range(g.n)] + [g.contract_edge(u, v) for u, v in g.edges()]
    return any(GraphMatcher(to_nx(h), target).subgraph_is_monomorphic() for h in cands)
