"""graph6 text encoding for graphs on at most 62 vertices.

Single-byte header chr(63 + n), then the upper triangle of the
adjacency matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ...,
packed big-endian into 6-bit groups, each group offset by 63.  Padding
bits must be zero.  Multi-byte headers (n > 62) are rejected since the
whole package caps graphs at 62 vertices.
"""

from __future__ import annotations

from .graph import Graph, from_edges


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the offending byte index."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def emit(g: Graph) -> str:
    """graph6 line for g (no trailing newline)."""
    out = [chr(63 + g.n)]
    acc = 0
    nbits = 0
    for v in range(1, g.n):
        for u in range(v):
            acc = acc << 1 | (g.adj[u] >> v & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        acc <<= 6 - nbits
        out.append(chr(63 + acc))
    return "".join(out)


def parse(text: str) -> Graph:
    """Decode one graph6 line; raises Graph6Error with a byte offset."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string", 0)
    head = ord(s[0])
    if head == 126:
        raise Graph6Error("multi-byte vertex count not supported (n > 62)", 0)
    if not 63 <= head <= 125:
        raise Graph6Error(f"header byte {head} outside graph6 range", 0)
    n = head - 63
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise Graph6Error(f"expected {need} payload bytes, got {len(body)}", 1 + min(len(body), need))
    edges = []
    idx = 0
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    for i, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise Graph6Error(f"payload byte {ord(ch)} outside graph6 range", 1 + i)
        for b in range(5, -1, -1):
            bit = val >> b & 1
            if idx < len(pairs):
                if bit:
                    edges.append(pairs[idx])
                idx += 1
            elif bit:
                raise Graph6Error("nonzero padding bit", 1 + i)
    return from_edges(n, edges)
