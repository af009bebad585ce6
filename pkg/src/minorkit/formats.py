"""graph6, plain edge-list and DOT serialisation."""

from __future__ import annotations

from .graph import Graph, GraphError


class FormatError(GraphError):
    """Raised for malformed serialised graphs."""


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise FormatError(f"graph6 cannot encode n={n}")


def encode_graph6(g: Graph) -> str:
    """Standard graph6: length header then upper-triangle bits, column-major."""
    out = [_encode_n(g.n)]
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, g.n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | (rj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"character {ch!r} out of graph6 range")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise FormatError("unsupported or truncated graph6 length header")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise FormatError(f"expected {need} data bytes for n={n}, got {len(body)}")
    if n > 64:
        raise FormatError(f"graph6 string has {n} vertices; capacity is 64")
    rows = [0] * n
    k = 0
    total = n * (n - 1) // 2
    pairs = ((i, j) for j in range(1, n) for i in range(j))
    for ch in body:
        val = ord(ch) - 63
        for shift in range(5, -1, -1):
            if k >= total:
                if val >> shift & 1:
                    raise FormatError("nonzero padding bits")
                continue
            i, j = next(pairs)
            if val >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph._raw(n, tuple(rows))


def to_edge_list(g: Graph) -> str:
    edges = list(g.edges())
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise FormatError("empty edge list")
    try:
        header = [int(x) for x in lines[0]]
        if len(header) != 2:
            raise FormatError("edge-list header must be 'n m'")
        n, m = header
        pairs = [tuple(int(x) for x in ln) for ln in lines[1:]]
    except ValueError as exc:
        raise FormatError(f"non-integer token in edge list: {exc}") from None
    if len(pairs) != m or any(len(p) != 2 for p in pairs):
        raise FormatError(f"edge list declares {m} edges, found {len(pairs)}")
    return Graph.from_edges(n, pairs)


def to_dot(g: Graph, name: str = "G", labels: list[str] | None = None) -> str:
    out = [f"graph {_dot_id(name)} {{"]
    for v in range(g.n):
        if labels is not None:
            out.append(f'  {v} [label="{labels[v]}"];')
        else:
            out.append(f"  {v};")
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"


def _dot_id(name: str) -> str:
    return name if name.isidentifier() else '"' + name.replace('"', r"\"") + '"'


def parse_graph_text(text: str) -> Graph:
    """Accept either a graph6 line or an edge list."""
    stripped = text.strip()
    first = stripped.splitlines()[0].strip() if stripped else ""
    if first and " " not in first and not first.isdigit():
        return decode_graph6(first)
    return parse_edge_list(text)
