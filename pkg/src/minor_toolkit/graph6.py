"""graph6 encoder/decoder and a DIMACS .col reader."""
from __future__ import annotations

from .graph import Graph, GraphError, build_graph

HEADER = b">>graph6<<"


class Graph6Error(ValueError):
    pass


def _encode_size(n: int) -> bytes:
    if n < 0:
        raise Graph6Error(f"negative vertex count {n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise Graph6Error(f"vertex count {n} exceeds the graph6 limit")


def _decode_size(data: bytes) -> tuple[int, int]:
    """Return (n, number of header bytes consumed)."""
    if not data:
        raise Graph6Error("malformed header: empty record")
    if data[0] != 126:
        n = data[0] - 63
        if not 0 <= n <= 62:
            raise Graph6Error(f"malformed header: size byte {data[0]} out of range")
        return n, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("malformed header: truncated long size field")
        vals = [b - 63 for b in data[2:8]]
        if any(not 0 <= v <= 63 for v in vals):
            raise Graph6Error("malformed header: long size byte out of range")
        n = 0
        for v in vals:
            n = n << 6 | v
        return n, 8
    if len(data) < 4:
        raise Graph6Error("malformed header: truncated extended size field")
    vals = [b - 63 for b in data[1:4]]
    if any(not 0 <= v <= 63 for v in vals):
        raise Graph6Error("malformed header: extended size byte out of range")
    n = vals[0] << 12 | vals[1] << 6 | vals[2]
    return n, 4


def encode_graph6(g: Graph) -> str:
    """Canonical graph6 text form (no trailing newline, no optional header)."""
    out = bytearray(_encode_size(g.n))
    bits = 0
    nbits = 0
    for v in range(1, g.n):
        row = g.adj[v]
        for u in range(v):
            bits = bits << 1 | (1 if u in row else 0)
            nbits += 1
            if nbits == 6:
                out.append(bits + 63)
                bits = nbits = 0
    if nbits:
        out.append((bits << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def decode_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 record; rejects malformed headers, truncation and trailing bytes."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    n, off = _decode_size(data)
    npairs = n * (n - 1) // 2
    nbytes = (npairs + 5) // 6
    body = data[off:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit field: need {nbytes} bytes, have {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error(f"trailing garbage: {len(body) - nbytes} extra bytes")
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[idx // 6] - 63
            if not 0 <= byte <= 63:
                raise Graph6Error(f"bit-field byte {body[idx // 6]} out of range")
            if byte >> (5 - idx % 6) & 1:
                edges.append((u, v))
            idx += 1
    # padding bits must be zero for a canonical record
    if npairs % 6:
        last = body[-1] - 63
        if last & ((1 << (6 - npairs % 6)) - 1):
            raise Graph6Error("nonzero padding bits")
    return build_graph(n, edges)


def read_graph6_file(path: str) -> list[Graph]:
    graphs = []
    with open(path, "rb") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                graphs.append(decode_graph6(line))
            except Graph6Error as exc:
                raise Graph6Error(f"{path}:{lineno}: {exc}") from exc
    return graphs


def read_dimacs_col(text: str) -> Graph:
    """Parse DIMACS .col format: 'p edge n m' header, 'e u v' lines, 1-indexed."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) < 4 or parts[1] not in ("edge", "edges", "col"):
                raise GraphError(f"line {lineno}: bad problem line {line!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise GraphError(f"line {lineno}: edge before problem line")
            u, v = int(parts[1]), int(parts[2])
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"line {lineno}: endpoint outside 1..{n}")
            if u != v:
                edges.append((u - 1, v - 1))
        else:
            raise GraphError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise GraphError("missing problem line")
    return build_graph(n, edges)
