"""Minor containment with branch-set certificates.

``find_minor`` grows branch sets by contracting host edges (depth-first,
memoised on the contracted labelled graph) and, at every node, looks for
the pattern as a subgraph of the contracted host.  The branch set of a
pattern vertex is the class of host vertices merged into its image.

When the pattern has minimum degree at least three, host vertices of degree
at most two are removed or suppressed up front; this never changes the
answer for such patterns.  A nonplanar pattern is never a minor of a planar
host, so such hosts are rejected by a linear-time planarity test first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

import networkx as nx

from .canonical import canonical_form, canonical_order
from .formats import encode_graph6
from .graph import Graph, GraphError, bits, connected_mask, contract_rows, _drop


@dataclass(frozen=True)
class MinorEmbedding:
    branch_sets: dict[int, frozenset[int]]
    edge_witness: dict[tuple[int, int], tuple[int, int]] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "branch_sets": {str(a): sorted(s) for a, s in sorted(self.branch_sets.items())},
            "witnesses": {f"{a}-{b}": list(e) for (a, b), e in sorted(self.edge_witness.items())},
        }

    @classmethod
    def from_json(cls, data: dict) -> "MinorEmbedding":
        branch = {int(a): frozenset(vs) for a, vs in data["branch_sets"].items()}
        wit = {}
        for key, e in data.get("witnesses", {}).items():
            a, b = key.split("-")
            wit[(int(a), int(b))] = (int(e[0]), int(e[1]))
        return cls(branch, wit)


def verify_embedding(host: Graph, pattern: Graph, emb: MinorEmbedding) -> bool:
    """Check the model from scratch against ``host`` and ``pattern``."""
    if set(emb.branch_sets) != set(range(pattern.n)):
        return False
    used: set[int] = set()
    for a in range(pattern.n):
        bs = emb.branch_sets[a]
        if not bs or any(not 0 <= v < host.n for v in bs):
            return False
        if used & bs:
            return False
        used |= bs
        # connectivity of the branch set by plain graph search
        start = min(bs)
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in host.neighbors(x):
                if y in bs and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != set(bs):
            return False
    for a, b in pattern.edges():
        w = emb.edge_witness.get((a, b)) or emb.edge_witness.get((b, a))
        if w is None:
            return False
        x, y = w
        if not (0 <= x < host.n and 0 <= y < host.n) or not host.has_edge(x, y):
            return False
        sa, sb = emb.branch_sets[a], emb.branch_sets[b]
        if not ((x in sa and y in sb) or (x in sb and y in sa)):
            return False
    return True


# -- subgraph matching ----------------------------------------------------


class _Pattern:
    """Pattern preprocessed for repeated subgraph matching."""

    def __init__(self, h: Graph):
        self.graph = h
        self.k = h.n
        self.m = h.size
        degs = h.degrees()
        self.min_degree = min(degs) if degs else 0
        self.connected = h.is_connected()
        self.planar = planar_lr(h)
        # spanning-match results keyed by the canonical form of a k-vertex host
        self.leaf_cache: dict[str, list[int] | None] = {}
        # the same results keyed by the labelled rows, skipping canonisation
        self.raw_cache: dict[tuple[int, ...], list[int] | None] = {}
        self.sorted_degrees = sorted(degs, reverse=True)
        order: list[int] = []
        placed = 0
        remaining = set(range(h.n))
        while remaining:
            # most already-placed neighbours first, then higher degree
            v = max(remaining, key=lambda x: ((h.rows[x] & placed).bit_count(), degs[x], -x))
            order.append(v)
            placed |= 1 << v
            remaining.discard(v)
        self.order = order
        pos = {v: i for i, v in enumerate(order)}
        self.back = [[pos[w] for w in bits(h.rows[v]) if pos[w] < i] for i, v in enumerate(order)]
        self.fwd = [sum(1 for w in bits(h.rows[v]) if pos[w] > i) for i, v in enumerate(order)]
        self.need = [degs[v] for v in order]
        # twins are interchangeable, so their images may be taken increasing
        self.twin_before = []
        for i, v in enumerate(order):
            prev = -1
            for p in range(i):
                w = order[p]
                if h.rows[v] & ~(1 << w) == h.rows[w] & ~(1 << v):
                    prev = p
            self.twin_before.append(prev)


def _degree_dominates(host_degrees: list[int], pat: _Pattern) -> bool:
    hs = sorted(host_degrees, reverse=True)
    if len(hs) < pat.k:
        return False
    return all(h >= d for h, d in zip(hs, pat.sorted_degrees))


def _subgraph_map(rows, pat: _Pattern) -> list[int] | None:
    """Injective map pattern -> host (by pattern order) preserving edges."""
    n = len(rows)
    full = (1 << n) - 1
    degs = [r.bit_count() for r in rows]
    k = pat.k
    if k == 0:
        return []
    image = [0] * k
    back = pat.back
    need = pat.need
    fwd = pat.fwd
    twin = pat.twin_before

    def extend(i: int, used: int) -> bool:
        if i == k:
            return True
        cand = full & ~used
        for p in back[i]:
            cand &= rows[image[p]]
        if twin[i] >= 0:
            cand &= ~((2 << image[twin[i]]) - 1)
        d = need[i]
        f = fwd[i]
        for w in bits(cand):
            if degs[w] < d or (rows[w] & ~used).bit_count() < f:
                continue
            image[i] = w
            if extend(i + 1, used | (1 << w)):
                return True
        return False

    if extend(0, 0):
        out = [0] * k
        for i, v in enumerate(pat.order):
            out[v] = image[i]
        return out
    return None


_RAW_CACHE_LIMIT = 1 << 20


def _leaf_match(rows, pat: _Pattern) -> list[int] | None:
    """Spanning match on a k-vertex host, shared across isomorphic hosts."""
    if rows in pat.raw_cache:
        return pat.raw_cache[rows]
    g = Graph._raw(len(rows), rows)
    order = canonical_order(g)
    key = encode_graph6(g.relabel(order))
    if key in pat.leaf_cache:
        phi = pat.leaf_cache[key]
    else:
        phi = _subgraph_map(g.relabel(order).rows, pat)
        pat.leaf_cache[key] = phi
    out = None if phi is None else [order[i] for i in phi]
    if len(pat.raw_cache) < _RAW_CACHE_LIMIT:
        pat.raw_cache[rows] = out
    return out


# -- contraction search ----------------------------------------------------


def _reduce_low_degree(rows, classes):
    """Delete degree <= 1 vertices and suppress degree-2 vertices."""
    rows = tuple(rows)
    classes = list(classes)
    changed = True
    while changed:
        changed = False
        for v, r in enumerate(rows):
            d = r.bit_count()
            if d <= 1:
                rows = _drop(rows, v)
                del classes[v]
                changed = True
                break
            if d == 2:
                w = (r & -r).bit_length() - 1
                a, b = min(v, w), max(v, w)
                rows = contract_rows(rows, a, b)
                classes[a] |= classes[b]
                del classes[b]
                changed = True
                break
    return rows, classes


def _search(host: Graph, pat: _Pattern):
    k, m_need = pat.k, pat.m
    reduce = pat.min_degree >= 3
    rows = host.rows
    classes = [1 << v for v in range(host.n)]
    if reduce:
        rows, classes = _reduce_low_degree(rows, classes)
    # A model of a connected pattern in a connected host extends to one whose
    # branch sets cover the host, so only k-vertex contractions need matching.
    spanning = pat.connected and host.is_connected()
    seen: set[tuple[int, ...]] = set()  # class tuples of visited states
    seen_rows: set[tuple[int, ...]] = set()

    def dfs(rows, classes):
        n = len(rows)
        if n < k:
            return None
        degs = [r.bit_count() for r in rows]
        m = sum(degs) // 2
        if m - (n - k if spanning else 0) < m_need:
            return None
        if n == k and spanning:
            if _degree_dominates(degs, pat):
                phi = _leaf_match(rows, pat)
                if phi is not None:
                    return phi, classes
            return None
        if not spanning and _degree_dominates(degs, pat):
            phi = _subgraph_map(rows, pat)
            if phi is not None:
                return phi, classes
        if n == k:
            return None
        moves = []
        slack = m - m_need - (n - k - 1 if spanning else 0)
        for u in range(n):
            ru = rows[u]
            for v in bits(ru >> (u + 1)):
                v += u + 1
                loss = 1 + (ru & rows[v]).bit_count()
                if loss <= slack:
                    # cheap merges of low-degree vertices keep the
                    # degrees balanced, which finds models much sooner
                    moves.append((loss, degs[u] + degs[v], u, v))
        moves.sort()
        for _, _, u, v in moves:
            ncls = classes[:]
            ncls[u] |= ncls[v]
            del ncls[v]
            # the merged partition determines the contracted graph, so
            # repeated states are skipped before any row arithmetic
            key = tuple(ncls)
            if key in seen:
                continue
            seen.add(key)
            nrows = contract_rows(rows, u, v)
            if reduce:
                nrows, ncls = _reduce_low_degree(nrows, ncls)
            # distinct partitions may still give the same labelled graph
            if nrows in seen_rows:
                continue
            seen_rows.add(nrows)
            found = dfs(nrows, ncls)
            if found is not None:
                return found
        return None

    return dfs(rows, classes)


def planar_lr(g: Graph) -> bool:
    """Left-right planarity test (networkx); independent of the minor engine."""
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges())
    return nx.check_planarity(nxg)[0]


def find_minor(host: Graph, pattern: Graph, planar_cut: bool = True) -> MinorEmbedding | None:
    """A certified model of ``pattern`` in ``host``, or ``None``.

    ``planar_cut=False`` disables the planarity shortcut, leaving a pure
    contraction search.
    """
    if pattern.n > host.n or pattern.size > host.size:
        return None
    pat = _pattern(pattern)
    if planar_cut and not pat.planar and planar_lr(host):
        return None
    found = _search(host, pat)
    if found is None:
        return None
    phi, classes = found
    branch = {a: frozenset(bits(classes[phi[a]])) for a in range(pattern.n)}
    masks = {a: classes[phi[a]] for a in range(pattern.n)}
    witness = {}
    for a, b in pattern.edges():
        mb = masks[b]
        for x in bits(masks[a]):
            hit = host.rows[x] & mb
            if hit:
                witness[(a, b)] = (x, (hit & -hit).bit_length() - 1)
                break
    return MinorEmbedding(branch, witness)


@lru_cache(maxsize=64)
def _pattern(pattern: Graph) -> _Pattern:
    return _Pattern(pattern)


@lru_cache(maxsize=1 << 17)
def has_minor(host: Graph, pattern: Graph) -> bool:
    return find_minor(host, pattern) is not None


# -- brute-force oracle ------------------------------------------------------

ORACLE_MAX_VERTICES = 8


def has_minor_oracle(host: Graph, pattern: Graph) -> bool:
    """Ground truth by exhausting deletions and contractions of ``host``."""
    if host.n > ORACLE_MAX_VERTICES:
        raise GraphError(f"oracle limited to hosts with <= {ORACLE_MAX_VERTICES} vertices")
    target = canonical_form(pattern)
    k, m = pattern.n, pattern.size
    seen = {canonical_form(host)}
    stack = [host]
    while stack:
        g = stack.pop()
        if g.n == k and g.size == m and canonical_form(g) == target:
            return True
        children = []
        for u, v in g.edges():
            children.append(g.delete_edge(u, v))
            children.append(g.contract_edge(u, v))
        for v in range(g.n):
            children.append(g.delete_vertex(v))
        for c in children:
            if c.n < k or c.size < m:
                continue
            key = canonical_form(c)
            if key not in seen:
                seen.add(key)
                stack.append(c)
    return False


# -- planarity and forbidden edges -------------------------------------------


def is_planar(g: Graph) -> bool:
    """Wagner's criterion: no K5 minor and no K_{3,3} minor."""
    from .families import complete, k33

    if g.n >= 3 and g.size > 3 * g.n - 6:
        # Euler's bound already forces a Kuratowski minor
        return False
    return find_minor(g, complete(5), planar_cut=False) is None and find_minor(g, k33(), planar_cut=False) is None


@dataclass(frozen=True)
class ForbiddenEdgeSet:
    graph: Graph
    pattern: Graph
    edges: tuple[tuple[int, int], ...]
    certificates: dict[tuple[int, int], MinorEmbedding]


def forbidden_edges(g: Graph, pattern: Graph, candidates: Iterable[tuple[int, int]] | None = None) -> ForbiddenEdgeSet:
    """Non-edges ``e`` of ``g`` such that ``g + e`` contains ``pattern``."""
    pool = sorted(candidates) if candidates is not None else list(g.non_edges())
    found = []
    certs = {}
    for u, v in pool:
        if g.has_edge(u, v):
            continue
        h = g.add_edge(u, v)
        emb = find_minor(h, pattern)
        if emb is not None:
            e = (min(u, v), max(u, v))
            found.append(e)
            certs[e] = emb
    return ForbiddenEdgeSet(g, pattern, tuple(found), certs)
