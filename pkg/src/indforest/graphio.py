"""graph6 codec and plain edge-list reader.

graph6 layout: order prefix N(n), then the upper-triangle adjacency bits
x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit groups, each
group offset by 63.  Only orders up to ``MAX_ORDER`` are accepted.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterator, Literal, Union

from .errors import BadChar, NonzeroPadding, OrderTooLarge, ParseError, TruncatedBits, GraphError
from .graph import MAX_ORDER, Graph, make_graph

HEADER = ">>graph6<<"

Format = Literal["graph6", "edge_list"]


def _values(line: str) -> list[int]:
    vals = []
    for ch in line:
        c = ord(ch)
        if not 63 <= c <= 126:
            raise BadChar(f"byte {c!r} outside 63..126")
        vals.append(c - 63)
    return vals


def _decode_order(vals: list[int]) -> tuple[int, int]:
    """Return (n, number of header bytes consumed)."""
    if not vals:
        raise TruncatedBits("empty graph6 string")
    if vals[0] != 63:
        return vals[0], 1
    if len(vals) >= 2 and vals[1] == 63:
        width = 6
        start = 2
    else:
        width = 3
        start = 1
    if len(vals) < start + width:
        raise TruncatedBits("truncated long-form order")
    n = 0
    for v in vals[start:start + width]:
        n = n << 6 | v
    return n, start + width


def decode_graph6(line: str) -> Graph:
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    vals = _values(line)
    n, pos = _decode_order(vals)
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    body = vals[pos:]
    if len(body) != nbytes:
        raise TruncatedBits(f"order {n} needs {nbytes} data bytes, got {len(body)}")
    stream = 0
    for v in body:
        stream = stream << 6 | v
    pad = nbytes * 6 - nbits
    if stream & ((1 << pad) - 1):
        raise NonzeroPadding("padding bits must be zero")
    stream >>= pad
    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if stream >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(adj))


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds {MAX_ORDER}")
    if n <= 62:
        out = [n]
    else:
        out = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    acc = nacc = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (g.adj[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(acc)
                acc = nacc = 0
    if nacc:
        out.append(acc << (6 - nacc))
    return "".join(chr(v + 63) for v in out)


@dataclass
class GraphStream:
    source: Union[str, Path, IO[str]]
    format: Format = "graph6"


def _open(source):
    if hasattr(source, "read"):
        return source, False
    if str(source) == "-":
        return sys.stdin, False
    return open(source, encoding="ascii", newline=None), True


def read_stream(src: Union[GraphStream, str, Path], format: Format | None = None) -> Iterator[tuple[int, Graph]]:
    """Lazily yield ``(index, graph)`` pairs in file order.

    Malformed input raises :class:`ParseError` carrying the 1-based line number.
    """
    if not isinstance(src, GraphStream):
        src = GraphStream(src, format or "graph6")
    elif format is not None:
        src = GraphStream(src.source, format)
    fh, owned = _open(src.source)
    try:
        if src.format == "graph6":
            yield from _read_graph6(fh)
        elif src.format == "edge_list":
            yield from _read_edge_list(fh)
        else:
            raise ValueError(f"unknown format {src.format!r}")
    finally:
        if owned:
            fh.close()


def _read_graph6(fh) -> Iterator[tuple[int, Graph]]:
    index = 0
    for line_no, raw in enumerate(fh, 1):
        line = raw.strip()
        if not line:
            continue
        try:
            g = decode_graph6(line)
        except GraphError as exc:
            raise ParseError(line_no, str(exc)) from exc
        yield index, g
        index += 1


def _ints(line: str, line_no: int, count: int) -> list[int]:
    parts = line.split()
    if len(parts) != count:
        raise ParseError(line_no, f"expected {count} integers, got {line!r}")
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise ParseError(line_no, f"non-integer token in {line!r}") from None


def _read_edge_list(fh) -> Iterator[tuple[int, Graph]]:
    """Records are ``n m`` followed by ``m`` lines ``u v`` (0-based); blank lines are skipped."""
    index = 0
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    line_no = 0
    for line_no, raw in enumerate(fh, 1):
        line = raw.strip()
        if not line:
            continue
        if header is None:
            n, m = _ints(line, line_no, 2)
            if n < 0 or m < 0:
                raise ParseError(line_no, "negative header value")
            header = (n, m, line_no)
        else:
            u, v = _ints(line, line_no, 2)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ParseError(line_no, f"repeated edge {key}")
            seen.add(key)
            edges.append((u, v))
        if header is not None and len(edges) == header[1]:
            try:
                g = make_graph(header[0], edges)
            except GraphError as exc:
                raise ParseError(line_no, str(exc)) from exc
            yield index, g
            index += 1
            header, edges, seen = None, [], set()
    if header is not None:
        raise ParseError(line_no, f"record starting at line {header[2]} ends after {len(edges)} of {header[1]} edges")


def parse_graph(text: str) -> Graph:
    """Parse a single graph given inline as graph6."""
    return decode_graph6(text.strip())
