"""graph6 encoding and decoding.

Upper-triangle adjacency bits in column order (0,1), (0,2), (1,2), (0,3), ...
packed big-endian into 6-bit groups, each offset by 63.
"""

from __future__ import annotations

import json

from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    pass


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    raise Graph6Error(f"graph6 cannot encode {n} vertices here")


def encode(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        rj = g.rows[j]
        bits.extend(rj >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = x << 1 | b
        body.append(chr(x + 63))
    return _encode_size(g.n) + "".join(body)


def decode(s: str | bytes) -> Graph:
    if isinstance(s, bytes):
        s = s.decode("ascii", errors="replace")
    s = s.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not 0 <= x <= 63 for x in data):
        raise Graph6Error(f"invalid graph6 character in {s!r}")
    if data[0] == 63:
        if len(data) < 4 or data[1] == 63:
            raise Graph6Error("unsupported graph6 size prefix")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"{n} vertices exceeds the {MAX_VERTICES}-vertex limit")
    nbits = n * (n - 1) // 2
    if len(body) != -(-nbits // 6):
        raise Graph6Error(f"graph6 body has {len(body)} bytes, expected {-(-nbits // 6)} for n={n}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, rows, validate=False)


def to_json(g: Graph) -> str:
    return json.dumps(g.to_dict(), sort_keys=True)
