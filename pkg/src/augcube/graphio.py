"""Edge-list and DIMACS serialization.

Edge-list::

    <|V|> <|E|>
    u v            # u < v, 0-based, sorted

DIMACS::

    p edge <|V|> <|E|>
    e u+1 v+1      # 1-based
"""

from __future__ import annotations

from augcube.core import Graph
from augcube.errors import ArgumentError, ParseError

FORMATS = ("edgelist", "dimacs")


def export_graph(graph, fmt: str = "edgelist") -> bytes:
    if fmt not in FORMATS:
        raise ArgumentError(f"unknown graph format {fmt!r}")
    edges = sorted(graph.edges())
    nv = graph.num_vertices
    if fmt == "edgelist":
        lines = [f"{nv} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    else:
        lines = [f"p edge {nv} {len(edges)}"] + [f"e {u + 1} {v + 1}" for u, v in edges]
    return ("\n".join(lines) + "\n").encode("ascii")


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def import_graph(data: bytes | str, fmt: str = "edgelist") -> Graph:
    if fmt not in FORMATS:
        raise ArgumentError(f"unknown graph format {fmt!r}")
    if isinstance(data, bytes):
        try:
            data = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(f"non-ascii input ({exc.reason})") from None

    header: tuple[int, int] | None = None
    edges: set[tuple[int, int]] = set()
    offset = 0 if fmt == "edgelist" else 1

    for lineno, raw in enumerate(data.splitlines(), start=1):
        tokens = raw.split()
        if not tokens:
            continue
        if fmt == "dimacs":
            tag, tokens = tokens[0], tokens[1:]
            if tag == "c":
                continue
            if tag == "p":
                if header is not None:
                    raise ParseError("duplicate problem line", lineno)
                if len(tokens) != 3 or tokens[0] != "edge":
                    raise ParseError("problem line must be 'p edge <V> <E>'", lineno)
                header = tuple(_ints(tokens[1:], lineno))
                continue
            if tag != "e":
                raise ParseError(f"unknown line type {tag!r}", lineno)
        elif header is None:
            if len(tokens) != 2:
                raise ParseError("header must be '<V> <E>'", lineno)
            header = tuple(_ints(tokens, lineno))
            continue

        if header is None:
            raise ParseError("edge before header", lineno)
        if len(tokens) != 2:
            raise ParseError("edge line needs exactly two endpoints", lineno)
        u, v = (t - offset for t in _ints(tokens, lineno))
        nv = header[0]
        if not (0 <= u < nv and 0 <= v < nv):
            raise ParseError(f"endpoint out of range for {nv} vertices", lineno)
        if u == v:
            raise ParseError("self-loop", lineno)
        e = (min(u, v), max(u, v))
        if e in edges:
            raise ParseError(f"duplicate edge {e}", lineno)
        edges.add(e)

    if header is None:
        raise ParseError("missing header")
    nv, ne = header
    if nv < 0 or ne < 0:
        raise ParseError("negative counts in header", 1)
    if len(edges) != ne:
        raise ParseError(f"header declares {ne} edges, found {len(edges)}")

    adj: list[list[int]] = [[] for _ in range(nv)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(tuple(tuple(sorted(a)) for a in adj))
