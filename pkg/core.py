#!/usr/bin/env python3
"""
Ordered graph data model, pairwise pattern calculus, transforms and wire formats
"""

import json
from enum import Enum
from itertools import combinations
from operator import itemgetter
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from errors import (
    DegreeTooLarge,
    DuplicateEdge,
    EndpointOutOfRange,
    InvalidArgument,
    MalformedInput,
    NonNormalizedEdge,
)


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


class Edge(tuple):
    """A normalized edge (u, v) with 1 <= u < v; compares lexicographically"""

    __slots__ = ()

    def __new__(cls, u: int, v: int):
        if not (_is_int(u) and _is_int(v)):
            raise MalformedInput(f"edge endpoints must be integers, got ({u!r}, {v!r})")
        if u >= v:
            raise NonNormalizedEdge(f"edge ({u}, {v}) is not normalized (need u < v)")
        return tuple.__new__(cls, (u, v))

    def __getnewargs__(self):
        return (self[0], self[1])

    u = property(itemgetter(0))
    v = property(itemgetter(1))

    @property
    def length(self) -> int:
        return self[1] - self[0]

    def __repr__(self) -> str:
        return f"Edge({self[0]}, {self[1]})"


class PairRelation(str, Enum):
    SHARED = "shared"
    SEPARATED = "separated"
    NESTED = "nested"
    CROSSING = "crossing"


def relation(x: int, y: int, u: int, v: int) -> PairRelation:
    """classify_pair on raw endpoints (x < y, u < v)"""
    if x == u or x == v or y == u or y == v:
        return PairRelation.SHARED
    if y < u or v < x:
        return PairRelation.SEPARATED
    if (x < u and v < y) or (u < x and y < v):
        return PairRelation.NESTED
    return PairRelation.CROSSING


def classify_pair(e1: Sequence[int], e2: Sequence[int]) -> PairRelation:
    """
    Classify two edges by how their index intervals meet

    Args:
        e1: First edge (u, v)
        e2: Second edge (u, v)

    Returns:
        PairRelation: SHARED, SEPARATED, NESTED or CROSSING
    """
    return relation(e1[0], e1[1], e2[0], e2[1])


def spans(edge: Sequence[int], gap: int) -> bool:
    """True when the edge strictly covers the gap between gap and gap + 1"""
    return edge[0] <= gap < edge[1]


def gaps(n: int) -> range:
    return range(1, n)


class Transform(str, Enum):
    REVERSE = "reverse"
    APEX = "apex"


class OrderedGraph:
    """Immutable graph on the ordered vertex set [n]"""

    __slots__ = ("n", "edges", "_adjacency")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        """
        Initialize the ordered graph

        Args:
            n (int): Number of vertices
            edges: Pairs (u, v) with 1 <= u < v <= n, no duplicates
        """
        if not _is_int(n) or n < 0:
            raise MalformedInput(f"vertex count must be a non-negative integer, got {n!r}")
        adjacency = [0] * (n + 1)
        normalized: List[Edge] = []
        for pair in edges:
            if len(pair) != 2:
                raise MalformedInput(f"edge {pair!r} must have exactly two endpoints")
            edge = pair if isinstance(pair, Edge) else Edge(pair[0], pair[1])
            u, v = edge
            if u < 1 or v > n:
                raise EndpointOutOfRange(f"edge ({u}, {v}) has an endpoint outside [1, {n}]")
            if adjacency[u] >> v & 1:
                raise DuplicateEdge(f"edge ({u}, {v}) appears twice")
            adjacency[u] |= 1 << v
            adjacency[v] |= 1 << u
            normalized.append(edge)
        normalized.sort()
        self.n = n
        self.edges: Tuple[Edge, ...] = tuple(normalized)
        self._adjacency: Tuple[int, ...] = tuple(adjacency)

    @classmethod
    def complete(cls, n: int) -> "OrderedGraph":
        return cls(n, combinations(range(1, n + 1), 2))

    @classmethod
    def empty(cls, n: int) -> "OrderedGraph":
        return cls(n)

    @property
    def e(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        if u < 1 or v > self.n or u == v:
            return False
        return bool(self._adjacency[u] >> v & 1)

    def neighbors(self, vertex: int) -> List[int]:
        mask = self._adjacency[vertex]
        return [w for w in range(1, self.n + 1) if mask >> w & 1]

    def left_neighbors(self, vertex: int) -> List[int]:
        return [w for w in self.neighbors(vertex) if w < vertex]

    def right_neighbors(self, vertex: int) -> List[int]:
        return [w for w in self.neighbors(vertex) if w > vertex]

    def with_edges(self, extra: Iterable[Sequence[int]]) -> "OrderedGraph":
        return OrderedGraph(self.n, list(self.edges) + list(extra))

    def without_edges(self, removed: Iterable[Sequence[int]]) -> "OrderedGraph":
        drop = {tuple(e) for e in removed}
        return OrderedGraph(self.n, [e for e in self.edges if e not in drop])

    def induced(self, vertices: Iterable[int]) -> List[Edge]:
        """Edges of G with both endpoints in the given vertex set"""
        keep = set(vertices)
        return [e for e in self.edges if e[0] in keep and e[1] in keep]

    def sort_key(self) -> Tuple[int, Tuple[Edge, ...]]:
        return (self.n, self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __contains__(self, edge) -> bool:
        return len(edge) == 2 and self.has_edge(edge[0], edge[1])

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrderedGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __lt__(self, other: "OrderedGraph") -> bool:
        return self.sort_key() < other.sort_key()

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        shown = ", ".join(f"({u},{v})" for u, v in self.edges[:8])
        more = ", ..." if self.e > 8 else ""
        return f"OrderedGraph(n={self.n}, e={self.e}, [{shown}{more}])"


def transform(graph: OrderedGraph, kind: Transform, degree: Optional[int] = None) -> OrderedGraph:
    """
    Apply REVERSE or APEX(d) to a graph

    Args:
        graph (OrderedGraph): Input graph
        kind (Transform): REVERSE maps i to n+1-i; APEX adds vertex n+1 joined to [d]
        degree (int, optional): d for APEX

    Returns:
        OrderedGraph: The transformed graph
    """
    kind = Transform(kind)
    n = graph.n
    if kind is Transform.REVERSE:
        return OrderedGraph(n, [(n + 1 - v, n + 1 - u) for u, v in graph.edges])
    if degree is None or not _is_int(degree) or degree < 0:
        raise InvalidArgument(f"APEX needs a non-negative degree, got {degree!r}")
    if degree > n:
        raise DegreeTooLarge(f"APEX degree {degree} exceeds vertex count {n}")
    return OrderedGraph(n + 1, list(graph.edges) + [(i, n + 1) for i in range(1, degree + 1)])


def reverse(graph: OrderedGraph) -> OrderedGraph:
    return transform(graph, Transform.REVERSE)


def canonical(graph: OrderedGraph) -> OrderedGraph:
    """Lexicographically smaller of G and its reversal"""
    mirrored = reverse(graph)
    return mirrored if mirrored.edges < graph.edges else graph


def graph_to_dict(graph: OrderedGraph) -> dict:
    return {"n": graph.n, "edges": [[u, v] for u, v in graph.edges]}


def graph_from_dict(data) -> OrderedGraph:
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise MalformedInput("graph JSON must be an object with 'n' and 'edges'")
    n, edges = data["n"], data["edges"]
    if not _is_int(n) or n < 0:
        raise MalformedInput(f"'n' must be a non-negative integer, got {n!r}")
    if not isinstance(edges, list):
        raise MalformedInput("'edges' must be a list")
    pairs = []
    for item in edges:
        if not isinstance(item, list) or len(item) != 2 or not all(_is_int(x) for x in item):
            raise MalformedInput(f"edge entry {item!r} must be a pair of integers")
        pairs.append((item[0], item[1]))
    return OrderedGraph(n, pairs)


def encode_graph(graph: OrderedGraph) -> str:
    """Compact JSON wire format, byte-stable for a given graph"""
    return json.dumps(graph_to_dict(graph), separators=(",", ":"))


def decode_graph(text: str) -> OrderedGraph:
    """
    Parse the JSON wire format

    Args:
        text (str): `{"n": <int>, "edges": [[u, v], ...]}`

    Returns:
        OrderedGraph: Validated graph with sorted edges
    """
    try:
        data = json.loads(text)
    except (json.JSONDecodeError, TypeError) as exc:
        raise MalformedInput(f"graph JSON could not be parsed: {exc}")
    return graph_from_dict(data)


def to_dot(graph: OrderedGraph) -> str:
    """Undirected DOT document with vertices pinned left to right in order"""
    lines = ["graph ordered {", "  rankdir=LR;", "  node [shape=circle];"]
    if graph.n:
        lines.append("  { rank=same; " + " ".join(f"{i};" for i in range(1, graph.n + 1)) + " }")
    for i in range(1, graph.n):
        lines.append(f"  {i} -- {i + 1} [style=invis, weight=100];")
    for u, v in graph.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
