"""graph6 / sparse6 line formats and the plain edge-list text format.

graph6 encodes the upper triangle of the adjacency matrix column by column
in 6-bit printable chunks; sparse6 (lines starting with ':') encodes an
edge stream.  Optional ">>graph6<<" / ">>sparse6<<" headers are ignored.
"""

from __future__ import annotations

from .graph import Graph, GraphError, from_edge_list

GRAPH6_HEADER = ">>graph6<<"
SPARSE6_HEADER = ">>sparse6<<"
_FORMAT_LIMIT = 68_719_476_735  # 2^36 - 1


class FormatError(GraphError):
    """Malformed graph6/sparse6/edge-list input."""


def _decode_size(data: bytes, pos: int) -> tuple[int, int]:
    """Decode the N(n) size prefix, returning (n, next position)."""
    if pos >= len(data):
        raise FormatError("empty graph6 payload")
    c = data[pos]
    if not (63 <= c <= 126):
        raise FormatError(f"bad byte {c} in size prefix")
    if c != 126:  # single-byte form, n <= 62
        return c - 63, pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        chunk, nxt = data[pos + 2 : pos + 8], pos + 8
        width = 6
    else:
        chunk, nxt = data[pos + 1 : pos + 4], pos + 4
        width = 3
    if len(chunk) != width:
        raise FormatError("truncated size prefix")
    n = 0
    for b in chunk:
        if not (63 <= b <= 126):
            raise FormatError(f"bad byte {b} in size prefix")
        n = (n << 6) | (b - 63)
    return n, nxt


def _encode_size(n: int) -> bytes:
    if n < 0 or n > _FORMAT_LIMIT:
        raise FormatError(f"vertex count {n} outside format range")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def _bits_of(data: bytes, pos: int) -> list[int]:
    bits = []
    for b in data[pos:]:
        if not (63 <= b <= 126):
            raise FormatError(f"non-printable byte {b} in payload")
        v = b - 63
        bits.extend((v >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    return bits


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 (or sparse6) line into a Graph."""
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER) :]
    if line.startswith(SPARSE6_HEADER):
        line = line[len(SPARSE6_HEADER) :]
    if not line:
        raise FormatError("empty graph6 line")
    if line.startswith(":"):
        return _parse_sparse6(line)
    data = line.encode("ascii", errors="strict") if line.isascii() else None
    if data is None:
        raise FormatError("non-ASCII characters in graph6 line")
    n, pos = _decode_size(data, 0)
    bits = _bits_of(data, pos)
    npairs = n * (n - 1) // 2
    if len(bits) < npairs or len(bits) >= npairs + 6:
        raise FormatError(
            f"graph6 payload has {len(bits)} bits, expected {npairs} (+<6 padding)"
        )
    if any(bits[npairs:]):
        raise FormatError("nonzero padding bits in graph6 payload")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if bits[k]:
                edges.append((u, v))
            k += 1
    return from_edge_list(n, edges)


def _parse_sparse6(line: str) -> Graph:
    data = line[1:].encode("ascii")
    n, pos = _decode_size(data, 0)
    bits = _bits_of(data, pos)
    k = max(1, (n - 1).bit_length())
    edges = set()
    v = 0
    i = 0
    while i + k < len(bits):
        b = bits[i]
        x = 0
        for j in range(i + 1, i + 1 + k):
            x = (x << 1) | bits[j]
        i += 1 + k
        if b:
            v += 1
        if v >= n or x >= n:
            break
        if x > v:
            v = x
        else:
            if x == v:
                raise FormatError(f"self-loop at vertex {x} in sparse6 line")
            edges.add((x, v))
    return from_edge_list(n, sorted(edges))


def write_graph6(g: Graph, max_vertices: int = _FORMAT_LIMIT) -> str:
    """Canonical graph6 encoding; round-trips through parse_graph6."""
    if g.n > max_vertices:
        raise FormatError(f"graph has {g.n} vertices, cap is {max_vertices}")
    out = bytearray(_encode_size(g.n))
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        row = g.adjacency[v]
        for u in range(v):
            acc = (acc << 1) | (1 if u in row else 0)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc, nbits = 0, 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def iter_graph6_file(lines) -> "list[tuple[int, Graph]]":
    """Parse an iterable of graph6/sparse6 lines to (line_number, Graph).

    Blank lines are skipped; parse errors are re-raised with the 1-based
    line number attached.
    """
    graphs = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            graphs.append((lineno, parse_graph6(line)))
        except GraphError as exc:
            raise FormatError(f"line {lineno}: {exc}") from exc
    return graphs


def parse_edge_list(text: str) -> Graph:
    """Parse the plain text format "n m\\nu v\\n..." (one edge per line)."""
    tokens = text.split()
    if len(tokens) < 2:
        raise FormatError("edge-list header must be 'n m'")
    try:
        n, m = int(tokens[0]), int(tokens[1])
        rest = [int(t) for t in tokens[2:]]
    except ValueError as exc:
        raise FormatError(f"non-integer token in edge list: {exc}") from exc
    if len(rest) != 2 * m:
        raise FormatError(f"expected {m} edges, found {len(rest) // 2}")
    return from_edge_list(n, list(zip(rest[0::2], rest[1::2])))


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
