"""Graph text formats: graph6 (short form, n <= 62) and a plain edge list.

graph6 layout: one byte ``n + 63``, then the upper adjacency triangle in
column-major order (0,1), (0,2), (1,2), (0,3), ... packed six bits per
byte, most significant bit first, zero-padded, each byte offset by 63.

Edge-list layout: the vertex count on the first line, then one ``u v``
pair per line (0-based). Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from .graph import CapacityError, Graph, GraphError, from_bitmask, from_edge_list, to_bitmask

GRAPH6_MAX_VERTICES = 62


class FormatError(ValueError):
    """Base class for text decoding errors."""


class Graph6CharacterError(FormatError):
    pass


class Graph6LengthError(FormatError):
    pass


class Graph6TrailingDataError(FormatError):
    pass


class EdgeListError(FormatError):
    pass


def _body_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def parse_graph6(text: str) -> Graph:
    line = text.strip("\r\n") if isinstance(text, str) else text.decode("ascii").strip("\r\n")
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise Graph6LengthError("empty graph6 line")
    for pos, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6CharacterError(f"character {ch!r} at position {pos} is outside the graph6 range 63..126")
    n = ord(line[0]) - 63
    if n > GRAPH6_MAX_VERTICES:
        raise CapacityError("long-form graph6 headers (n > 62) are not supported")
    expected = _body_length(n)
    body = line[1:]
    if len(body) < expected:
        raise Graph6LengthError(f"graph6 line for n={n} needs {expected} data bytes, got {len(body)}")
    if len(body) > expected:
        raise Graph6TrailingDataError(f"{len(body) - expected} unexpected bytes after the graph6 data")
    total = n * (n - 1) // 2
    code = 0
    for byte_index, ch in enumerate(body):
        chunk = ord(ch) - 63
        for b in range(6):
            k = byte_index * 6 + b
            if chunk >> (5 - b) & 1:
                if k >= total:
                    raise Graph6TrailingDataError("nonzero padding bits at the end of the graph6 data")
                code |= 1 << k
    return from_bitmask(n, code)


def emit_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_VERTICES:
        raise CapacityError(f"short-form graph6 holds at most {GRAPH6_MAX_VERTICES} vertices, got {g.n}")
    code = to_bitmask(g)
    out = [chr(g.n + 63)]
    for byte_index in range(_body_length(g.n)):
        chunk = 0
        for b in range(6):
            chunk = chunk << 1 | (code >> (byte_index * 6 + b) & 1)
        out.append(chr(chunk + 63))
    return "".join(out)


def parse_edgelist(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise EdgeListError("edge list is empty; the first line must hold the vertex count")
    if len(rows[0]) != 1:
        raise EdgeListError(f"first line must be a single vertex count, got {' '.join(rows[0])!r}")
    try:
        n = int(rows[0][0])
        edges = []
        for row in rows[1:]:
            if len(row) != 2:
                raise EdgeListError(f"expected 'u v', got {' '.join(row)!r}")
            edges.append((int(row[0]), int(row[1])))
    except ValueError as exc:
        if isinstance(exc, FormatError):
            raise
        raise EdgeListError(f"non-integer token in edge list: {exc}") from None
    try:
        return from_edge_list(n, edges)
    except GraphError as exc:
        raise EdgeListError(str(exc)) from None


def emit_edgelist(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def sniff_format(text: str) -> str:
    """Guess ``'edgelist'`` or ``'graph6'`` from the payload.

    Digits lie outside the graph6 alphabet, so a leading digit means an edge list.
    """
    stripped = text.lstrip()
    return "edgelist" if stripped[:1].isdigit() else "graph6"


def parse_graph(text: str, fmt: str | None = None) -> Graph:
    fmt = fmt or sniff_format(text)
    if fmt == "graph6":
        return parse_graph6(text.strip())
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise FormatError(f"unknown graph format {fmt!r}")


def emit_graph(g: Graph, fmt: str) -> str:
    if fmt == "graph6":
        return emit_graph6(g)
    if fmt == "edgelist":
        return emit_edgelist(g).rstrip("\n")
    raise FormatError(f"unknown graph format {fmt!r}")
