from __future__ import annotations

import logging

import networkx as nx

from ..errors import ParseError, StructuralError
from .model import Graph

logger = logging.getLogger(__name__)

EDGE_LIST = "edge-list"
GRAPH6 = "graph6"
FORMATS = (EDGE_LIST, GRAPH6)

_GRAPH6_HEADER = ">>graph6<<"


def detect_format(text: str) -> str:
    """An edge list starts with a bare vertex count; anything else is graph6."""
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        return EDGE_LIST if stripped.split()[0].isdigit() else GRAPH6
    return EDGE_LIST


def parse_graph(text: str, format: str | None = None) -> Graph:
    fmt = format or detect_format(text)
    if fmt == EDGE_LIST:
        return _parse_edge_list(text)
    if fmt == GRAPH6:
        return _parse_graph6(text)
    raise ParseError(f"unknown graph format {fmt!r}; expected one of {', '.join(FORMATS)}")


def serialize_graph(graph: Graph, format: str = EDGE_LIST) -> str:
    if format == GRAPH6:
        return to_graph6(graph)
    if format != EDGE_LIST:
        raise ParseError(f"unknown graph format {format!r}")
    lines = [str(graph.order)]
    named = graph.labels is not None and graph.labels != tuple(str(v) for v in graph.vertices)
    for u, v in graph.sorted_edges:
        if named:
            lines.append(f"{graph.label(u)} {graph.label(v)}")
        else:
            lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def to_graph6(graph: Graph) -> str:
    return nx.to_graph6_bytes(graph.to_networkx(), header=False).decode("ascii").strip()


def from_graph6(text: str) -> Graph:
    return _parse_graph6(text)


def _parse_edge_list(text: str) -> Graph:
    order: int | None = None
    pairs: list[tuple[int, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if order is None:
            if len(tokens) != 1 or not tokens[0].isdigit():
                raise ParseError("first line must hold the vertex count", line=lineno)
            order = int(tokens[0])
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", line=lineno)
        pairs.append((lineno, tokens[0], tokens[1]))

    if order is None:
        raise ParseError("empty edge list", line=1)

    numeric = all(a.lstrip("-").isdigit() and b.lstrip("-").isdigit() for _, a, b in pairs)
    labels: tuple[str, ...] | None = None
    index: dict[str, int] = {}
    if not numeric:
        for _, a, b in pairs:
            for name in (a, b):
                if name not in index:
                    index[name] = len(index)
        if len(index) > order:
            raise ParseError(f"{len(index)} vertex names for a graph on {order} vertices")
        spare = [str(i) for i in range(order) if str(i) not in index][: order - len(index)]
        names = list(index) + spare
        if len(names) != order:
            raise ParseError("could not complete the label table without collisions")
        labels = tuple(names)

    edges: dict[tuple[int, int], int] = {}
    for lineno, a, b in pairs:
        u, v = (int(a), int(b)) if numeric else (index[a], index[b])
        if u == v:
            raise ParseError(f"self-loop at vertex {a}", line=lineno)
        if not (0 <= u < order and 0 <= v < order):
            raise ParseError(f"edge {a} {b} leaves the vertex range [0, {order})", line=lineno)
        key = (min(u, v), max(u, v))
        if key in edges:
            raise ParseError(f"edge {a} {b} repeats line {edges[key]}", line=lineno)
        edges[key] = lineno

    try:
        return Graph(order, frozenset(edges), labels=labels)
    except StructuralError as exc:
        raise ParseError(str(exc)) from exc


def _parse_graph6(text: str) -> Graph:
    data = text.strip()
    start = 0
    if data.startswith(_GRAPH6_HEADER):
        start = len(_GRAPH6_HEADER)
    body = data[start:]
    if not body:
        raise ParseError("empty graph6 string", offset=start)
    for i, ch in enumerate(body):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"byte {ch!r} is outside the graph6 alphabet", offset=start + i)
    try:
        g = nx.from_graph6_bytes(body.encode("ascii"))
    except (nx.NetworkXError, ValueError) as exc:
        raise ParseError(f"malformed graph6 data: {exc}", offset=start) from exc
    return Graph.from_networkx(g)
