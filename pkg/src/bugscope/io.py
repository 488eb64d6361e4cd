"""graph6 and plain edge-list readers/writers.

graph6 follows the standard encoding: the vertex count ``N(n)`` followed by
the upper triangle of the adjacency matrix, column by column, packed into
6-bit groups biased by 63.  The edge-list format is a line holding ``n``
followed by one ``u v`` pair per line (0-based).
"""

from __future__ import annotations

import os
from typing import Iterable, Iterator, List

from .errors import GraphFormatError
from .graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError("graph too large for graph6")


def to_graph6(g: Graph) -> str:
    n = g.n
    out = [_encode_n(n)]
    acc = 0
    nbits = 0
    for j in range(1, n):
        nb = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (i in nb)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str, line: int | None = None) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 string", line, 1)
    for pos, ch in enumerate(s, start=1):
        if not 63 <= ord(ch) <= 126:
            raise GraphFormatError(f"invalid graph6 character {ch!r}", line, pos)
    data = [ord(c) - 63 for c in s]
    if data[0] < 63:
        n, start = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n, start = (data[1] << 12) | (data[2] << 6) | data[3], 4
    elif len(data) >= 8 and data[1] == 63:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        start = 8
    else:
        raise GraphFormatError("truncated graph6 size field", line, 1)
    body = data[start:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphFormatError(
            f"graph6 body has {len(body)} bytes, expected {need} for n={n}", line, start + 1
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for lineno, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        yield from_graph6(raw, line=lineno)


def read_graph6_file(path) -> List[Graph]:
    with open(path, encoding="ascii", errors="replace") as fh:
        return list(read_graph6_lines(fh))


def write_graph6_file(path, graphs: Iterable[Graph]) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")


def to_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges]) + "\n"


def from_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if n is None:
            if len(parts) != 1 or not parts[0].isdigit():
                raise GraphFormatError("first line must hold the vertex count", lineno, 1)
            n = int(parts[0])
            continue
        if len(parts) != 2:
            raise GraphFormatError(f"expected 'u v', got {s!r}", lineno, 1)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"non-integer vertex in {s!r}", lineno, 1) from None
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"invalid edge ({u}, {v}) for n={n}", lineno, 1)
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("empty edge list", 1, 1)
    return Graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Parse a single graph, sniffing the format from the first data line."""
    for raw in text.splitlines():
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        if s.isdigit():
            return from_edge_list(text)
        graphs = list(read_graph6_lines(text.splitlines()))
        if len(graphs) != 1:
            raise GraphFormatError(f"expected one graph6 line, found {len(graphs)}")
        return graphs[0]
    raise GraphFormatError("no graph data found", 1, 1)


def read_graph(path) -> Graph:
    with open(path, encoding="ascii", errors="replace") as fh:
        return parse_graph(fh.read())


def write_graph(path, g: Graph, fmt: str | None = None) -> None:
    if fmt is None:
        fmt = "graph6" if os.fspath(path).endswith(".g6") else "edgelist"
    with open(path, "w", encoding="ascii") as fh:
        fh.write(to_graph6(g) + "\n" if fmt == "graph6" else to_edge_list(g))
