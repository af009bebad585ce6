"""Generators for the named graphs, with their 1-based presentation labels.

Storage labels are always ``0..n-1``.  ``display_labels(name, param)`` returns
the presentation label of each storage vertex (rim vertices ``1..k``, hubs
``u`` and ``v``), which the CLI uses when printing edge sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, GraphError


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def k33() -> Graph:
    return complete_bipartite(3, 3)


def dw(n: int) -> Graph:
    """Double wheel: rim ``0..n-1``, hubs ``u = n`` and ``v = n+1``."""
    if n < 3:
        raise GraphError("DW_n needs n >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n) for i in range(n)] + [(i, n + 1) for i in range(n)]
    return Graph.from_edges(n + 2, edges)


def dw_plus(n: int) -> Graph:
    return dw(n).add_edge(n, n + 1)


def aw(rim: int) -> Graph:
    """Alternating double wheel on a rim of even length ``rim``.

    Hub ``u = rim`` is joined to the even storage labels (display labels
    vertices 1, 3, 5, ...) and hub ``v = rim+1`` to the odd storage labels.
    """
    if rim < 6 or rim % 2:
        raise GraphError("AW_2n needs an even rim length of at least 6")
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim + (i % 2)) for i in range(rim)]
    return Graph.from_edges(rim + 2, edges)


def aw_plus(rim: int) -> Graph:
    return aw(rim).add_edge(rim, rim + 1)


def ladder(n: int) -> Graph:
    """``v_i`` at storage ``i-1`` and ``u_i`` at storage ``n+i-1``."""
    if n < 3:
        raise GraphError("ladder needs n >= 3")
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(n + i, n + i + 1) for i in range(n - 1)]
    edges += [(i, n + i) for i in range(n)]
    return Graph.from_edges(2 * n, edges)


def mobius(n: int) -> Graph:
    return ladder(n).add_edge(0, 2 * n - 1).add_edge(n - 1, n)


def cycle_sq(n: int) -> Graph:
    if n < 5:
        raise GraphError("C_n^2 needs n >= 5")
    edges = [(i, (i + d) % n) for i in range(n) for d in (1, 2)]
    return Graph.from_edges(n, edges)


_X1_EDGES = [(0, 1), (1, 2), (0, 2)]
_X2_EDGES = [(3, 4), (4, 5), (3, 5)]


def k33_ij(i: int, j: int) -> Graph:
    """K_{3,3} plus ``i`` edges inside {0,1,2} and ``j`` inside {3,4,5}."""
    if not (0 <= i <= 3 and 0 <= j <= 3):
        raise GraphError("k33_ij needs 0 <= i, j <= 3")
    g = k33()
    for u, v in _X1_EDGES[:i] + _X2_EDGES[:j]:
        g = g.add_edge(u, v)
    return g


def wagner() -> Graph:
    """V8: rim 0..7 with the four diameter chords {i, i+4}."""
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)]
    return Graph.from_edges(8, edges)


# display labels 1 and 4 (rim distance 3) / 1 and 3 (rim distance 2)
V8_E_CHORD = (0, 3)
V8_F_CHORD = (0, 2)


def v8_plus_e() -> Graph:
    return wagner().add_edge(*V8_E_CHORD)


def v8_plus_f() -> Graph:
    return wagner().add_edge(*V8_F_CHORD)


def cube() -> Graph:
    """3-cube on bit strings 0..7; vertices differing in one bit are adjacent."""
    return Graph.from_edges(8, ((a, a ^ (1 << k)) for a in range(8) for k in range(3) if a < a ^ (1 << k)))


TERRAHAWK_APEX = 8


def terrahawk() -> Graph:
    """Cube plus apex 8 joined to the face {0, 1, 2, 3}."""
    g = Graph.from_edges(9, list(cube().edges()))
    for w in (0, 1, 3, 2):
        g = g.add_edge(TERRAHAWK_APEX, w)
    return g


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def oct() -> Graph:
    """Octahedron K_{2,2,2}; antipodal pairs are {0,1}, {2,3}, {4,5}."""
    return Graph.from_edges(6, ((a, b) for a, b in combinations(range(6), 2) if a // 2 != b // 2))


def line_graph(g: Graph) -> Graph:
    edges = list(g.edges())
    out = []
    for i, j in combinations(range(len(edges)), 2):
        if set(edges[i]) & set(edges[j]):
            out.append((i, j))
    return Graph.from_edges(len(edges), out)


def add_cross_chords(g: Graph, a1: int, a2: int, a3: int, a4: int) -> Graph:
    """Add the crossing chords a1a3 and a2a4 over the path a1a2a3a4."""
    if len({a1, a2, a3, a4}) != 4:
        raise GraphError("corners of an X must be distinct")
    if not (g.has_edge(a1, a2) and g.has_edge(a2, a3) and g.has_edge(a3, a4)):
        raise GraphError(f"{a1}-{a2}-{a3}-{a4} is not a path")
    if g.has_edge(a1, a3) or g.has_edge(a2, a4):
        raise GraphError("chord of the X already present")
    return g.add_edge(a1, a3).add_edge(a2, a4)


# -- registry ---------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    name: str
    param: tuple[int, ...] = ()
    labeling_doc: str = ""
    labels: tuple[str, ...] = field(default=(), compare=False)

    def build(self) -> Graph:
        return _REGISTRY[self.name][0](*self.param)


def _numbered(k: int) -> list[str]:
    return [str(i + 1) for i in range(k)]


def _rim_hubs(k: int) -> list[str]:
    return _numbered(k) + ["u", "v"]


def _ladder_labels(n: int) -> list[str]:
    return [f"v{i + 1}" for i in range(n)] + [f"u{i + 1}" for i in range(n)]


def _k33ij(*args: int) -> Graph:
    if len(args) != 2:
        raise GraphError("k33ij takes two parameters i and j")
    return k33_ij(*args)


# name -> (constructor, number of parameters, label function, labelling note)
_REGISTRY = {
    "wagner": (wagner, 0, lambda: _numbered(8), "rim 1..8 at 0..7, chords {i, i+4}"),
    "v8e": (v8_plus_e, 0, lambda: _numbered(8), "wagner plus chord 14"),
    "v8f": (v8_plus_f, 0, lambda: _numbered(8), "wagner plus chord 13"),
    "dw": (dw, 1, lambda n: _rim_hubs(n), "rim 1..n at 0..n-1, u at n, v at n+1"),
    "dw+": (dw_plus, 1, lambda n: _rim_hubs(n), "rim 1..n at 0..n-1, u at n, v at n+1"),
    "aw": (aw, 1, lambda k: _rim_hubs(k), "rim 1..2n at 0..2n-1, u~odd rim labels, v~even"),
    "aw+": (aw_plus, 1, lambda k: _rim_hubs(k), "rim 1..2n at 0..2n-1, u~odd rim labels, v~even"),
    "ladder": (ladder, 1, _ladder_labels, "v1..vn at 0..n-1, u1..un at n..2n-1"),
    "mobius": (mobius, 1, _ladder_labels, "v1..vn at 0..n-1, u1..un at n..2n-1"),
    "c2": (cycle_sq, 1, lambda n: _numbered(n), "rim 1..n at 0..n-1"),
    "k33ij": (_k33ij, 2, lambda i, j: _numbered(6), "X1 = 1,2,3 at 0..2; X2 = 4,5,6 at 3..5"),
    "k33": (k33, 0, lambda: _numbered(6), "X1 = 1,2,3 at 0..2; X2 = 4,5,6 at 3..5"),
    "terrahawk": (terrahawk, 0, lambda: _numbered(8) + ["apex"], "cube 1..8 at 0..7 (bit strings), apex at 8"),
    "cube": (cube, 0, lambda: _numbered(8), "bit strings 0..7 labelled 1..8"),
    "petersen": (petersen, 0, lambda: _numbered(10), "outer 1..5, inner 6..10, spokes i~i+5"),
    "oct": (oct, 0, lambda: _numbered(6), "antipodal pairs {1,2}, {3,4}, {5,6}"),
    "lk33": (lambda: line_graph(k33()), 0, lambda: _numbered(9), "edges of K33 in lexicographic order"),
    "K": (complete, 1, lambda n: _numbered(n), "1..n at 0..n-1"),
    "C": (cycle, 1, lambda n: _numbered(n), "1..n at 0..n-1"),
}

FAMILY_NAMES = tuple(_REGISTRY)


class UnknownFamily(KeyError):
    pass


def family_arity(name: str) -> int:
    if name not in _REGISTRY:
        raise UnknownFamily(name)
    return _REGISTRY[name][1]


def family_spec(name: str, *param: int) -> FamilySpec:
    if name not in _REGISTRY:
        raise UnknownFamily(name)
    ctor, arity, labeler, doc = _REGISTRY[name]
    if len(param) != arity:
        raise GraphError(f"family {name!r} takes {arity} parameter(s), got {len(param)}")
    return FamilySpec(name, tuple(param), doc, tuple(labeler(*param)))


def build_family(name: str, *param: int) -> Graph:
    return family_spec(name, *param).build()


def display_labels(name: str, *param: int) -> list[str]:
    return list(family_spec(name, *param).labels)


def parse_family(token: str) -> FamilySpec:
    """Parse ``name`` or ``name:p1,p2`` (``K5``/``C6`` shorthands included)."""
    if ":" in token:
        name, _, rest = token.partition(":")
        params = tuple(int(p) for p in rest.split(",") if p)
        return family_spec(name, *params)
    if token in _REGISTRY:
        return family_spec(token)
    if token[:1] in ("K", "C") and token[1:].isdigit():
        return family_spec(token[0], int(token[1:]))
    raise UnknownFamily(token)


def label_vertex(labels: list[str], token: str) -> int:
    """Storage index of a presentation label such as ``"4"`` or ``"u"``."""
    try:
        return labels.index(token)
    except ValueError:
        raise GraphError(f"no vertex labelled {token!r}") from None


def label_edge(labels: list[str], token: str) -> tuple[int, int]:
    """Decode a two-character labelled edge like ``"14"`` or ``"6u"``."""
    if len(token) != 2:
        raise GraphError(f"edge token {token!r} must name two single-character labels")
    return label_vertex(labels, token[0]), label_vertex(labels, token[1])
