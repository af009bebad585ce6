"""Seed-rooted generation of internally 4-connected graphs.

A *stage* is a run of one to ``max_ops`` primitive operations (edge
addition or vertex split) that ends at an internally 4-connected graph;
intermediate graphs may fail the predicate.  ``grow`` explores stages
breadth-first from the seeds, deduplicating by canonical form, and drops
every graph that contains the excluded pattern (all its descendants would
contain it as well).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .canonical import canonical_form
from .connectivity import is_internally_4_connected
from .families import v8_plus_e, wagner
from .formats import decode_graph6, encode_graph6
from .graph import Graph, GraphError, bits, mask_of, split_rows
from .minor import MinorEmbedding, find_minor

MAX_OPS = 3


@dataclass(frozen=True)
class AddEdge:
    u: int
    v: int

    def apply(self, g: Graph) -> Graph:
        return g.add_edge(self.u, self.v)

    def to_json(self) -> dict:
        return {"op": "add", "edge": [self.u, self.v]}


@dataclass(frozen=True)
class Split:
    v: int
    X: tuple[int, ...]
    Y: tuple[int, ...]

    def apply(self, g: Graph) -> Graph:
        return g.split_vertex(self.v, self.X, self.Y)

    def to_json(self) -> dict:
        return {"op": "split", "vertex": self.v, "X": list(self.X), "Y": list(self.Y)}


Op = AddEdge | Split


def op_from_json(d: dict) -> Op:
    if d["op"] == "add":
        return AddEdge(*d["edge"])
    if d["op"] == "split":
        return Split(d["vertex"], tuple(d["X"]), tuple(d["Y"]))
    raise ValueError(f"unknown operation {d['op']!r}")


def replay(seed: Graph, trace: Iterable[Op]) -> Graph:
    g = seed
    for op in trace:
        g = op.apply(g)
    return g


@dataclass(frozen=True)
class GrowthNode:
    graph: Graph
    canon: str
    trace: tuple[Op, ...]
    depth: int
    seed_index: int = 0


@dataclass(frozen=True)
class Bounds:
    max_vertices: int
    max_edges: int
    max_stages: int
    max_ops: int = MAX_OPS

    def __post_init__(self):
        if min(self.max_vertices, self.max_edges, self.max_stages, self.max_ops) <= 0:
            raise GraphError("growth bounds must be positive")
        if self.max_ops > MAX_OPS:
            raise GraphError(f"a stage has at most {MAX_OPS} operations")

    def to_json(self) -> dict:
        return {
            "max_vertices": self.max_vertices,
            "max_edges": self.max_edges,
            "max_stages": self.max_stages,
            "max_ops": self.max_ops,
        }


# -- single-step operations ------------------------------------------------


def split_choices(g: Graph, v: int, degree3_only: bool = True) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Unordered (X, Y) covers of N(v) allowed for a split of ``v``."""
    nb = g.neighbors(v)
    d = len(nb)
    if d < 4:
        return []
    out = []
    if degree3_only:
        for X in combinations(nb, 2):
            Y = tuple(w for w in nb if w not in X)
            if d == 4 and X > Y:
                continue
            out.append((X, Y))
        return out
    full = mask_of(nb)
    seen = set()
    for xm in range(1, 1 << d):
        X = tuple(nb[i] for i in range(d) if xm >> i & 1)
        if len(X) < 2:
            continue
        xmask = mask_of(X)
        rest = full & ~xmask
        # Y must contain everything X misses and may reuse vertices of X
        for extra in _submasks(xmask):
            ymask = rest | extra
            if ymask.bit_count() < 2:
                continue
            key = (min(xmask, ymask), max(xmask, ymask))
            if key in seen:
                continue
            seen.add(key)
            out.append((tuple(bits(key[0])), tuple(bits(key[1]))))
    return out


def _submasks(m: int):
    s = m
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & m


def raw_children(g: Graph, degree3_only: bool = True) -> list[tuple[Op, Graph]]:
    """Every single-operation successor of ``g`` (not deduplicated)."""
    out: list[tuple[Op, Graph]] = []
    for u, v in g.non_edges():
        out.append((AddEdge(u, v), g.add_edge(u, v)))
    rows = g.rows
    for v in range(g.n):
        for X, Y in split_choices(g, v, degree3_only):
            child = Graph._raw(g.n + 1, split_rows(rows, v, mask_of(X), mask_of(Y)))
            out.append((Split(v, X, Y), child))
    return out


def edge_additions(g: Graph) -> list[Graph]:
    seen: dict[str, Graph] = {}
    for u, v in g.non_edges():
        h = g.add_edge(u, v)
        seen.setdefault(canonical_form(h), h)
    return [seen[k] for k in sorted(seen)]


def vertex_splits(g: Graph, degree3_only: bool = True, vertices: Iterable[int] | None = None) -> list[Graph]:
    pool = range(g.n) if vertices is None else vertices
    seen: dict[str, Graph] = {}
    for v in pool:
        for X, Y in split_choices(g, v, degree3_only):
            h = g.split_vertex(v, X, Y)
            seen.setdefault(canonical_form(h), h)
    return [seen[k] for k in sorted(seen)]


def successors_i4c(g: Graph, max_ops: int = 1, degree3_only: bool = True) -> list[Graph]:
    """Internally 4-connected graphs reachable in 1..max_ops operations."""
    if not is_internally_4_connected(g):
        raise GraphError("successors_i4c needs an internally 4-connected graph")
    if not 1 <= max_ops <= MAX_OPS:
        raise GraphError(f"max_ops must lie in 1..{MAX_OPS}")
    frontier = {canonical_form(g): g}
    seen = set(frontier)
    found: dict[str, Graph] = {}
    for _ in range(max_ops):
        nxt: dict[str, Graph] = {}
        for key in sorted(frontier):
            for _op, h in raw_children(frontier[key], degree3_only):
                c = canonical_form(h)
                if c in seen:
                    continue
                seen.add(c)
                nxt[c] = h
                if is_internally_4_connected(h):
                    found[c] = h
        frontier = nxt
    return [found[k] for k in sorted(found)]


# -- the growth engine ---------------------------------------------------------

PREDICATES = ("v8e-minor-free", "v8-minor-free", "always")


def predicate_pattern(keep: str) -> Graph | None:
    if keep == "v8e-minor-free":
        return v8_plus_e()
    if keep == "v8-minor-free":
        return wagner()
    if keep == "always":
        return None
    raise GraphError(f"unknown predicate {keep!r}; expected one of {PREDICATES}")


@dataclass
class GrowthReport:
    seeds: list[dict]
    bounds: Bounds
    keep: str
    explored: int
    survivors: list[GrowthNode]
    eliminated: list[tuple[str, MinorEmbedding]]
    truncated: list[str]
    seed_graphs: list[Graph] = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {
            "seed": self.seeds,
            "bounds": self.bounds.to_json(),
            "filter": self.keep,
            "explored": self.explored,
            "survivors": [
                {
                    "graph6": node.canon,
                    "seed_index": node.seed_index,
                    "stage": node.depth,
                    "trace": [op.to_json() for op in node.trace],
                }
                for node in self.survivors
            ],
            "eliminated": [{"graph6": g6, "witness": emb.to_json()} for g6, emb in self.eliminated],
            "truncated": list(self.truncated),
        }


def _expand(args):
    """Worker: children of one frontier graph within the size bounds."""
    g6, max_vertices, max_edges = args
    g = decode_graph6(g6)
    out = []
    hit = False
    for op, h in raw_children(g):
        if h.n > max_vertices or h.size > max_edges:
            hit = True
            continue
        key = canonical_form(h)
        i4c = _I4C.get(key)
        if i4c is None:
            i4c = is_internally_4_connected(h)
            if len(_I4C) < 1 << 20:
                _I4C[key] = i4c
        out.append((op, key, i4c))
    return out, hit


# per-process memo of the i-4-c predicate by canonical form
_I4C: dict[str, bool] = {}


def _judge(args):
    """Worker: pattern witness on the canonical relabelling, or None."""
    g6, pattern_g6 = args
    if pattern_g6 is None:
        return None
    emb = find_minor(decode_graph6(g6), decode_graph6(pattern_g6))
    return None if emb is None else emb.to_json()


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("MINORKIT_JOBS", "1")))
    except ValueError:
        return 1


class _Runner:
    def __init__(self, jobs: int):
        self.jobs = jobs
        self.pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None

    def map(self, fn, items: Sequence):
        if self.pool is None or len(items) < 2:
            return [fn(x) for x in items]
        chunk = max(1, len(items) // (self.jobs * 4))
        return list(self.pool.map(fn, items, chunksize=chunk))

    def close(self):
        if self.pool is not None:
            self.pool.shutdown()


def grow(
    seeds: Sequence[Graph],
    keep: str = "v8e-minor-free",
    bounds: Bounds | tuple[int, int, int] = (10, 30, 2),
    jobs: int | None = None,
    seed_names: Sequence[str] | None = None,
) -> GrowthReport:
    """Breadth-first stage growth from ``seeds`` under ``bounds``."""
    if not isinstance(bounds, Bounds):
        bounds = Bounds(*bounds)
    pattern = predicate_pattern(keep)
    pattern_g6 = None if pattern is None else encode_graph6(pattern)
    for s in seeds:
        if not is_internally_4_connected(s):
            raise GraphError("every seed must be internally 4-connected")
    runner = _Runner(jobs or default_jobs())
    try:
        return _grow(seeds, keep, bounds, pattern_g6, runner, seed_names)
    finally:
        runner.close()


def _grow(seeds, keep, bounds, pattern_g6, runner, seed_names) -> GrowthReport:
    graphs: dict[str, Graph] = {}
    traces: dict[str, tuple[int, tuple[Op, ...]]] = {}
    states: dict[str, list[tuple[int, int]]] = {}
    verdict: dict[str, dict | None] = {}
    survivors: dict[str, GrowthNode] = {}
    truncated: set[str] = set()
    buckets: dict[tuple[int, int], set[str]] = {}

    def judge(keys: list[str]) -> None:
        todo = [k for k in keys if k not in verdict]
        for k, res in zip(todo, runner.map(_judge, [(k, pattern_g6) for k in todo])):
            verdict[k] = res

    def offer(key: str, state: tuple[int, int]) -> bool:
        have = states.setdefault(key, [])
        if any(s <= state[0] and j <= state[1] for s, j in have):
            return False
        have.append(state)
        return True

    seed_keys = []
    for i, s in enumerate(seeds):
        key = canonical_form(s)
        seed_keys.append(key)
        if key not in graphs:
            graphs[key] = s
            traces[key] = (i, ())
    judge(sorted(set(seed_keys)))
    for key in sorted(set(seed_keys)):
        if verdict[key] is None:
            survivors[key] = GrowthNode(graphs[key], key, (), 0, traces[key][0])
            if offer(key, (0, 0)):
                if bounds.max_stages > 0:
                    buckets.setdefault((0, 0), set()).add(key)

    while buckets:
        state = min(buckets)
        s, j = state
        frontier = sorted(buckets.pop(state))
        results = runner.map(
            _expand, [(encode_graph6(graphs[k]), bounds.max_vertices, bounds.max_edges) for k in frontier]
        )
        fresh: list[str] = []
        pending: list[tuple[str, bool, tuple[int, int]]] = []
        for parent, (children, hit) in zip(frontier, results):
            if hit and parent in survivors:
                truncated.add(parent)
            seed_idx, ptrace = traces[parent]
            pgraph = graphs[parent]
            for op, key, i4c in children:
                if key not in graphs:
                    # store the labelled child so traces replay exactly
                    graphs[key] = op.apply(pgraph)
                    traces[key] = (seed_idx, ptrace + (op,))
                    fresh.append(key)
                nxt = (s + 1, 0) if i4c else (s, j + 1)
                pending.append((key, i4c, nxt))
        judge(sorted(fresh))
        for key, i4c, nxt in pending:
            if verdict[key] is not None:
                continue
            if i4c and key not in survivors:
                seed_idx, tr = traces[key]
                survivors[key] = GrowthNode(graphs[key], key, tr, nxt[0], seed_idx)
            expandable = nxt[0] < bounds.max_stages if i4c else nxt[1] < bounds.max_ops
            if not expandable:
                if i4c:
                    truncated.add(key)
                continue
            if offer(key, nxt):
                buckets.setdefault(nxt, set()).add(key)

    eliminated = []
    for key in sorted(verdict):
        if verdict[key] is not None:
            eliminated.append((key, MinorEmbedding.from_json(verdict[key])))
    names = list(seed_names) if seed_names else [None] * len(seeds)
    seed_info = [{"name": nm, "graph6": encode_graph6(g)} for nm, g in zip(names, seeds)]
    return GrowthReport(
        seeds=seed_info,
        bounds=bounds,
        keep=keep,
        explored=len(graphs),
        survivors=[survivors[k] for k in sorted(survivors)],
        eliminated=eliminated,
        truncated=sorted(truncated & set(survivors)),
        seed_graphs=list(seeds),
    )
