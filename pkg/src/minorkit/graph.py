"""Immutable simple graphs stored as rows of adjacency bitmasks.

Vertices are the integers ``0..n-1``.  Every structural operation returns a
new :class:`Graph`; the receiver is never modified.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 64


class GraphError(ValueError):
    """Base class for invalid graph operations."""


class CapacityError(GraphError):
    pass


class LoopError(GraphError):
    pass


class VertexError(GraphError):
    pass


class EdgeAbsentError(GraphError):
    pass


class SplitError(GraphError):
    pass


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """A simple undirected graph on at most 64 vertices."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Iterable[int] = ()):
        rows = tuple(rows)
        if n < 0 or n > MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if not rows:
            rows = (0,) * n
        if len(rows) != n:
            raise GraphError("row count does not match vertex count")
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full:
                raise VertexError(f"row {v} references a vertex out of range")
            if r >> v & 1:
                raise LoopError(f"loop at vertex {v}")
            for w in bits(r):
                if not rows[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
        self.n = n
        self.rows = rows
        self._hash = None

    @classmethod
    def _raw(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # trusted constructor for internal use: skips validation
        g = object.__new__(cls)
        g.n = n
        g.rows = rows
        g._hash = None
        return g

    @classmethod
    def empty(cls, n: int) -> "Graph":
        if n < 0 or n > MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        return cls._raw(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0 or n > MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise LoopError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls._raw(n, tuple(rows))

    # -- queries -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    def __len__(self) -> int:
        return self.n

    @property
    def order(self) -> int:
        return self.n

    @property
    def size(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    edge_count = size

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, r in enumerate(self.rows):
            for v in bits(r >> (u + 1)):
                yield u, u + 1 + v

    def non_edges(self) -> Iterator[tuple[int, int]]:
        for u, v in combinations(range(self.n), 2):
            if not self.rows[u] >> v & 1:
                yield u, v

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return connected_mask(self.rows, 1, (1 << self.n) - 1) == (1 << self.n) - 1

    # -- operations --------------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        _check_vertex(self.n, u)
        _check_vertex(self.n, v)
        if u == v:
            raise LoopError(f"loop at vertex {u}")
        if self.rows[u] >> v & 1:
            return self
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph._raw(self.n, tuple(rows))

    def delete_edge(self, u: int, v: int) -> "Graph":
        _check_vertex(self.n, u)
        _check_vertex(self.n, v)
        if u == v or not self.rows[u] >> v & 1:
            raise EdgeAbsentError(f"no edge {{{u}, {v}}}")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph._raw(self.n, tuple(rows))

    def delete_vertex(self, v: int) -> "Graph":
        _check_vertex(self.n, v)
        return Graph._raw(self.n - 1, _drop(self.rows, v))

    def delete_vertices(self, vs: Iterable[int]) -> "Graph":
        g = self
        for v in sorted(set(vs), reverse=True):
            g = g.delete_vertex(v)
        return g

    def contract_edge(self, u: int, v: int) -> "Graph":
        """Contract edge uv; the merged vertex keeps label ``min(u, v)``."""
        _check_vertex(self.n, u)
        _check_vertex(self.n, v)
        if u == v or not self.rows[u] >> v & 1:
            raise EdgeAbsentError(f"no edge {{{u}, {v}}}")
        return Graph._raw(self.n - 1, contract_rows(self.rows, u, v))

    def split_vertex(self, v: int, X: Iterable[int], Y: Iterable[int]) -> "Graph":
        """Replace ``v`` by adjacent ``x`` (label v) and ``y`` (label n).

        ``x`` is joined to ``X`` and ``y`` to ``Y``; the two sets must cover
        the neighbourhood of ``v`` and may overlap.
        """
        _check_vertex(self.n, v)
        if self.n + 1 > MAX_VERTICES:
            raise CapacityError("split would exceed vertex capacity")
        xm, ym = mask_of(X), mask_of(Y)
        nb = self.rows[v]
        if nb.bit_count() < 4:
            raise SplitError(f"vertex {v} has degree {nb.bit_count()} < 4")
        if (xm | ym) != nb:
            raise SplitError("X and Y must be subsets covering N(v)")
        if xm.bit_count() < 2 or ym.bit_count() < 2:
            raise SplitError("each side of a split needs at least two neighbours")
        return Graph._raw(self.n + 1, split_rows(self.rows, v, xm, ym))

    def relabel(self, perm: list[int]) -> "Graph":
        """Return the graph where old vertex ``perm[i]`` becomes vertex ``i``."""
        inv = [0] * self.n
        for i, p in enumerate(perm):
            inv[p] = i
        rows = []
        for p in perm:
            r = 0
            for w in bits(self.rows[p]):
                r |= 1 << inv[w]
            rows.append(r)
        return Graph._raw(self.n, tuple(rows))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        vs = sorted(set(vertices))
        keep = set(vs)
        return self.delete_vertices(v for v in range(self.n) if v not in keep)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph._raw(self.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(self.rows)))


def _check_vertex(n: int, v: int) -> None:
    if not 0 <= v < n:
        raise VertexError(f"vertex {v} out of range 0..{n - 1}")


def _compact(r: int, v: int) -> int:
    low = r & ((1 << v) - 1)
    return low | (r >> (v + 1) << v)


def _drop(rows: tuple[int, ...], v: int) -> tuple[int, ...]:
    return tuple(_compact(r, v) for i, r in enumerate(rows) if i != v)


def contract_rows(rows: tuple[int, ...], u: int, v: int) -> tuple[int, ...]:
    """Row tuple of the simple graph obtained by contracting ``uv``."""
    if u > v:
        u, v = v, u
    bu, bv = 1 << u, 1 << v
    merged = (rows[u] | rows[v]) & ~(bu | bv)
    new = list(rows)
    new[u] = merged
    for w in bits(rows[v] & ~bu):
        new[w] |= bu
    return _drop(tuple(new), v)


def split_rows(rows: tuple[int, ...], v: int, xm: int, ym: int) -> tuple[int, ...]:
    n = len(rows)
    bv, by = 1 << v, 1 << n
    new = list(rows)
    for w in bits(rows[v]):
        new[w] &= ~bv
    for w in bits(xm):
        new[w] |= bv
    for w in bits(ym):
        new[w] |= by
    new[v] = xm | by
    new.append(ym | bv)
    return tuple(new)


def connected_mask(rows, start: int, allowed: int) -> int:
    """Vertices of ``allowed`` reachable from the vertex set ``start``."""
    seen = start & allowed
    frontier = seen
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def components(rows, allowed: int) -> list[int]:
    """Connected components (as masks) of the subgraph induced on ``allowed``."""
    out = []
    rest = allowed
    while rest:
        comp = connected_mask(rows, rest & -rest, allowed)
        out.append(comp)
        rest &= ~comp
    return out
