"""Vertex cuts, 3-separations and the 4-connectivity variants.

All predicates enumerate candidate cuts exhaustively; graphs here have at
most a dozen or so vertices, so this is both exact and cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graph import Graph, GraphError, bits, components, mask_of


@dataclass(frozen=True)
class Separation:
    cut: frozenset[int]
    interior1: frozenset[int]
    interior2: frozenset[int]

    def is_valid_for(self, g: Graph) -> bool:
        a, b, c = self.interior1, self.interior2, self.cut
        if not a or not b or a & b or a & c or b & c:
            return False
        if a | b | c != frozenset(range(g.n)):
            return False
        bm = mask_of(b)
        return all(not g.rows[v] & bm for v in a)

    @property
    def sides(self) -> tuple[int, int]:
        k = len(self.cut)
        return k + len(self.interior1), k + len(self.interior2)


def _disconnects(g: Graph, cut: int) -> list[int] | None:
    rest = ((1 << g.n) - 1) & ~cut
    comps = components(g.rows, rest)
    return comps if len(comps) >= 2 else None


def vertex_connectivity(g: Graph) -> int:
    """Size of a smallest vertex cut; ``n - 1`` for complete graphs."""
    if g.n < 2:
        raise GraphError("vertex connectivity needs at least two vertices")
    for k in range(g.n - 1):
        for cut in combinations(range(g.n), k):
            if _disconnects(g, mask_of(cut)):
                return k
    return g.n - 1


def is_k_connected(g: Graph, k: int) -> bool:
    if g.n <= k:
        return False
    for size in range(k):
        for cut in combinations(range(g.n), size):
            if _disconnects(g, mask_of(cut)):
                return False
    return True


def enumerate_3_separations(g: Graph) -> list[Separation]:
    """All 3-separations up to swapping sides, by cut then component grouping."""
    out: list[Separation] = []
    for cut in combinations(range(g.n), 3):
        comps = _disconnects(g, mask_of(cut))
        if not comps:
            continue
        cutset = frozenset(cut)
        first, rest = comps[0], comps[1:]
        # the first component always sits on side 1, which fixes the side swap
        for pick in range(1 << len(rest)):
            if pick == (1 << len(rest)) - 1:
                continue
            a = first
            b = 0
            for i, c in enumerate(rest):
                if pick >> i & 1:
                    a |= c
                else:
                    b |= c
            out.append(Separation(cutset, frozenset(bits(a)), frozenset(bits(b))))
    return out


def _three_cut_profile(g: Graph):
    """Yield (cut mask, component masks) for every disconnecting 3-set."""
    for cut in combinations(range(g.n), 3):
        m = mask_of(cut)
        comps = _disconnects(g, m)
        if comps:
            yield m, comps


def _small_side_ok(comps: list[int]) -> bool:
    # every bipartition of the components must leave a singleton interior
    sizes = [c.bit_count() for c in comps]
    if len(sizes) == 2:
        return min(sizes) == 1
    if len(sizes) == 3:
        return max(sizes) == 1
    return False


@lru_cache(maxsize=1 << 16)
def _status(g: Graph) -> tuple[bool, bool]:
    """(quasi 4-connected, internally 4-connected)."""
    if g.n < 5 or not is_k_connected(g, 3):
        return False, False
    quasi = True
    internal = True
    for cut, comps in _three_cut_profile(g):
        if not _small_side_ok(comps):
            return False, False
        if internal and any(g.rows[v] & cut for v in bits(cut)):
            internal = False
    return quasi, internal


def is_quasi_4_connected(g: Graph) -> bool:
    return _status(g)[0]


def is_internally_4_connected(g: Graph) -> bool:
    # a cubic vertex on a triangle has a 3-cut with an edge inside it
    if g.n >= 5 and has_cubic_vertex_in_triangle(g):
        return False
    return _status(g)[1]


def has_cubic_vertex_in_triangle(g: Graph) -> bool:
    rows = g.rows
    for v, r in enumerate(rows):
        if r.bit_count() == 3 and any(rows[w] & r for w in bits(r)):
            return True
    return False
