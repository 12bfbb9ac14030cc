"""Edge-list and graph6 readers and writers."""
from __future__ import annotations

from pathlib import Path

from .errors import GraphError, ParseError
from .graph_core import Graph, build_graph

GRAPH6_HEADER = b">>graph6<<"


def _as_bytes(text: bytes | str) -> bytes:
    return text.encode("ascii") if isinstance(text, str) else text


def parse_edgelist(text: bytes | str) -> Graph:
    """First line ``n m``, then m lines ``u v`` (0-indexed)."""
    try:
        lines = _as_bytes(text).decode("ascii").split("\n")
    except UnicodeDecodeError as exc:
        raise ParseError("edge list must be ASCII", f"byte {exc.start}") from None
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty edge list", "line 1")

    def ints(lineno: int, line: str) -> tuple[int, int]:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two integers, got {line!r}", f"line {lineno}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", f"line {lineno}") from None
        if a < 0 or b < 0:
            raise ParseError(f"negative value in {line!r}", f"line {lineno}")
        return a, b

    n, m = ints(1, lines[0])
    if len(lines) - 1 != m:
        raise ParseError(f"header announces {m} edges, found {len(lines) - 1}", f"line {len(lines)}")
    edges = [ints(i + 2, line) for i, line in enumerate(lines[1:])]
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def serialize_edgelist(g: Graph) -> bytes:
    out = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges]
    return ("\n".join(out) + "\n").encode("ascii")


def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def serialize_graph6(g: Graph) -> bytes:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(63 + int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6))
    return _encode_n(g.n) + body + b"\n"


def parse_graph6(text: bytes | str) -> Graph:
    data = _as_bytes(text).strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise ParseError("empty graph6 string", "byte 0")
    for pos, ch in enumerate(data):
        if not 63 <= ch <= 126:
            raise ParseError(f"invalid graph6 byte {ch!r}", f"byte {pos}")
    if data[0] != 126:
        n, start = data[0] - 63, 1
    elif len(data) > 1 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated vertex count", "byte 2")
        n, start = 0, 8
        for ch in data[2:8]:
            n = (n << 6) | (ch - 63)
    else:
        if len(data) < 4:
            raise ParseError("truncated vertex count", "byte 1")
        n, start = 0, 4
        for ch in data[1:4]:
            n = (n << 6) | (ch - 63)
    need = n * (n - 1) // 2
    body = data[start:]
    if len(body) != (need + 5) // 6:
        raise ParseError(f"expected {(need + 5) // 6} adjacency bytes for n={n}, got {len(body)}",
                         f"byte {start}")
    bits = []
    for ch in body:
        v = ch - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[need:]):
        raise ParseError("non-zero padding bits", f"byte {len(data) - 1}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def parse_graph(text: bytes | str, format: str = "edgelist") -> Graph:
    if format == "edgelist":
        return parse_edgelist(text)
    if format == "graph6":
        return parse_graph6(text)
    raise ValueError(f"unknown graph format {format!r}")


def serialize_graph(g: Graph, format: str = "edgelist") -> bytes:
    if format == "edgelist":
        return serialize_edgelist(g)
    if format == "graph6":
        return serialize_graph6(g)
    raise ValueError(f"unknown graph format {format!r}")


def guess_format(path: str | Path) -> str:
    return "graph6" if str(path).endswith((".g6", ".graph6")) else "edgelist"


def read_graph(path: str | Path, format: str | None = None) -> Graph:
    return parse_graph(Path(path).read_bytes(), format or guess_format(path))
