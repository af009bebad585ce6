"""Canonical labelling by equitable partition refinement plus backtracking.

The canonical form of a graph is the graph6 string of the relabelling whose
upper-triangle bit string is lexicographically largest among all leaves of
the refinement search tree.  Refinement only uses isomorphism-invariant
information, so isomorphic graphs share the same set of leaf codes.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .formats import encode_graph6
from .graph import Graph, bits


def _refine(rows, cells: list[list[int]], splitters: list[int]) -> list[list[int]]:
    """Refine an ordered partition against a queue of splitter vertex sets.

    Each cell is split by the number of neighbours its vertices have in the
    splitter; fragments are ordered by decreasing count and queued as new
    splitters.  With every cell queued initially the result is equitable.
    """
    n = len(rows)
    head = 0
    while head < len(splitters) and len(cells) < n:
        sm = splitters[head]
        head += 1
        new_cells: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                c = (rows[v] & sm).bit_count()
                if c in groups:
                    groups[c].append(v)
                else:
                    groups[c] = [v]
            if len(groups) == 1:
                new_cells.append(cell)
                continue
            for c in sorted(groups, reverse=True):
                part = groups[c]
                new_cells.append(part)
                m = 0
                for v in part:
                    m |= 1 << v
                splitters.append(m)
        cells = new_cells
    return cells


def _code(rows, order: list[int]) -> int:
    """Upper-triangle bits (graph6 order) of the relabelled graph as an int."""
    n = len(order)
    code = 0
    for j in range(1, n):
        rj = rows[order[j]]
        for i in range(j):
            code = (code << 1) | (rj >> order[i] & 1)
    return code


def _twin_classes(rows, cell: list[int]) -> list[int]:
    """One representative per class of mutually interchangeable vertices."""
    reps: list[int] = []
    for v in cell:
        bv = 1 << v
        for w in reps:
            bw = 1 << w
            if rows[v] & ~bw == rows[w] & ~bv:
                break
        else:
            reps.append(v)
    return reps


def canonical_order(g: Graph) -> list[int]:
    """Vertex order producing the canonical relabelling of ``g``."""
    rows = g.rows
    n = g.n
    if n == 0:
        return []
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(rows[v].bit_count(), []).append(v)
    start = [by_degree[d] for d in sorted(by_degree, reverse=True)]
    cells = _refine(rows, start, [sum(1 << v for v in c) for c in start])

    best_code = -1
    best_order: list[int] = []

    def search(cells: list[list[int]]) -> None:
        nonlocal best_code, best_order
        target = -1
        for i, cell in enumerate(cells):
            if len(cell) > 1 and (target < 0 or len(cell) < len(cells[target])):
                target = i
        if target < 0:
            order = [c[0] for c in cells]
            code = _code(rows, order)
            if code > best_code:
                best_code = code
                best_order = order
            return
        cell = cells[target]
        for v in _twin_classes(rows, cell):
            rest = [w for w in cell if w != v]
            search(_refine(rows, cells[:target] + [[v], rest] + cells[target + 1:], [1 << v]))

    search(cells)
    return best_order


@lru_cache(maxsize=1 << 18)
def _canonical(g: Graph) -> tuple[str, Graph]:
    cg = g.relabel(canonical_order(g))
    return encode_graph6(cg), cg


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonical relabelling; equal iff isomorphic."""
    return _canonical(g)[0]


def canonical_graph(g: Graph) -> Graph:
    return _canonical(g)[1]


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size != h.size:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def dedup(graphs: Iterable[Graph]) -> list[Graph]:
    """One representative per isomorphism class, sorted by canonical form."""
    seen: dict[str, Graph] = {}
    for g in graphs:
        seen.setdefault(canonical_form(g), g)
    return [seen[k] for k in sorted(seen)]
