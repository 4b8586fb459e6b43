"""graph6 / sparse6 / DOT encoders and a graph6 decoder.

Encoders take a vertex count and an iterable of undirected edges so they
serve both WH-graphs (fixed A/B/C linearisation) and canonical relabellings.
"""

from __future__ import annotations


def _size_bytes(n):
    """N(n) as 6-bit values; the caller adds 63."""
    if n <= 62:
        return [n]
    if n <= 258047:
        return [63] + [(n >> s) & 63 for s in (12, 6, 0)]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def _pack6(bits):
    bits = list(bits)
    bits += [0] * (-len(bits) % 6)
    out = []
    for i in range(0, len(bits), 6):
        val = 0
        for bit in bits[i:i + 6]:
            val = (val << 1) | bit
        out.append(val)
    return out


def to_graph6(n, edges) -> str:
    es = {(min(u, v), max(u, v)) for u, v in edges}
    # upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
    bits = [1 if (i, j) in es else 0 for j in range(1, n) for i in range(j)]
    return "".join(chr(x + 63) for x in _size_bytes(n) + _pack6(bits))


def from_graph6(s: str):
    """Return (n, sorted edge list) for a graph6 string (no header)."""
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    data = [ord(ch) - 63 for ch in s]
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    else:
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        rest = data[8:]
    bits = []
    for x in rest:
        bits.extend((x >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return n, sorted(edges)


def to_sparse6(n, edges) -> str:
    """sparse6 encoding; edges are emitted sorted by (larger end, smaller end)."""
    es = sorted({(max(u, v), min(u, v)) for u, v in edges})
    k = max(1, (n - 1).bit_length())
    bits = []
    cur = 0

    def put(x):
        bits.extend((x >> s) & 1 for s in range(k - 1, -1, -1))

    for v, u in es:
        if v == cur:
            bits.append(0)
            put(u)
        elif v == cur + 1:
            cur = v
            bits.append(1)
            put(u)
        else:
            cur = v
            bits.append(1)
            put(v)
            bits.append(0)
            put(u)
    pad = -len(bits) % 6
    # padding must not be read as an extra edge to vertex n - 1
    if k < 6 and n == (1 << k) and pad >= k and cur < n - 1:
        bits.append(0)
        pad -= 1
    bits.extend([1] * pad)
    return ":" + "".join(chr(x + 63) for x in _size_bytes(n) + _pack6(bits))


def to_dot(n, edges, label=str, edge_attrs=None, name="G") -> str:
    """Undirected DOT text; ``edge_attrs`` maps an edge (u, v), u < v, to a dict."""
    lines = [f"graph {name} {{"]
    for v in range(n):
        lines.append(f'  {v} [label="{label(v)}"];')
    for u, v in sorted((min(e), max(e)) for e in edges):
        attrs = (edge_attrs or {}).get((u, v))
        if attrs:
            body = ", ".join(f'{k}="{val}"' for k, val in attrs.items())
            lines.append(f"  {u} -- {v} [{body}];")
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def wh_graph6(g) -> str:
    return to_graph6(g.order, g.kinds)


def wh_sparse6(g) -> str:
    return to_sparse6(g.order, g.kinds)


def wh_dot(g) -> str:
    attrs = {e: {"kind": kind.value} for e, kind in g.kinds.items()}
    return to_dot(g.order, g.kinds, label=g.label, edge_attrs=attrs,
                  name='"%s"' % g.params)
