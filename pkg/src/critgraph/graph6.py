"""graph6 encoding (https://users.cecs.anu.edu.au/~bdm/data/formats.txt).

Only the undirected dense format is supported; graphs are capped at 64 vertices.
"""

from __future__ import annotations

from .graph import MAX_ORDER, Graph, GraphError


class Graph6Error(GraphError):
    pass


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    return "~" + "".join(chr(63 + (n >> shift & 63)) for shift in (12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        body.append(chr(63 + value))
    return _encode_order(g.n) + "".join(body)


def from_graph6(line: str) -> Graph:
    text = line.strip()
    if text.startswith(">>graph6<<"):
        text = text[10:]
    if not text:
        raise Graph6Error("empty graph6 record")
    codes = [ord(c) - 63 for c in text]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"character outside graph6 range in {text!r}")
    if codes[0] == 63:
        if len(codes) < 4 or codes[1] == 63:
            raise Graph6Error("unsupported or truncated long order header")
        n = codes[1] << 12 | codes[2] << 6 | codes[3]
        body = codes[4:]
    else:
        n = codes[0]
        body = codes[1:]
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds {MAX_ORDER}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    return Graph(n, tuple(rows))


def read_graph6(lines):
    """Yield ``(line_number, graph)`` for each non-blank line, 1-based."""
    for number, line in enumerate(lines, start=1):
        if line.strip():
            yield number, from_graph6(line)
