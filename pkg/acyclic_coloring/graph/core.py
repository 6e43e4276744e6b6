"""Immutable simple undirected graphs on vertices 1..n and DIMACS .col I/O."""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import FrozenSet, Iterable, Iterator, List, Set, Tuple, Union

from acyclic_coloring.errors import GraphDomainError, GraphParseError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    ``adjacency[v]`` is the strictly increasing tuple of neighbors of ``v``; index 0 is
    unused so vertex ids can be used directly.
    """

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    m: int
    max_degree: int
    _neighbor_sets: Tuple[FrozenSet[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_neighbor_sets", tuple(frozenset(a) for a in self.adjacency))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphDomainError(f"vertex count must be non-negative, got {n}")
        adj: List[Set[int]] = [set() for _ in range(n + 1)]
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphDomainError(f"edge ({u}, {v}) has a vertex outside 1..{n}")
            if u == v:
                raise GraphDomainError(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adj)
        adjacency = ((),) + adjacency[1:]
        m = sum(len(a) for a in adjacency) // 2
        max_degree = max((len(a) for a in adjacency), default=0)
        return cls(n=n, adjacency=adjacency, m=m, max_degree=max_degree)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> Tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return v in self._neighbor_sets[u]

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Yield every edge once as (u, v) with u < v, sorted."""
        for u in self.vertices:
            for v in self.adjacency[u]:
                if u < v:
                    yield u, v

    def _check_vertex(self, v: int):
        if not 1 <= v <= self.n:
            raise GraphDomainError(f"vertex {v} outside 1..{self.n}")


def common_neighbor_count(g: Graph, u: int, v: int) -> int:
    """|N(u) ∩ N(v)| by merging the two sorted adjacency lists."""
    if u == v:
        raise GraphDomainError(f"common neighbors need two distinct vertices, got {u} twice")
    a, b = g.neighbors(u), g.neighbors(v)
    i = j = count = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            count += 1
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return count


def parse_graph(text: str) -> Graph:
    """Parse DIMACS .col text (``c`` comments, one ``p edge n m`` header, ``e u v`` lines).

    Duplicate edges are merged; the header's edge count is informational.
    """
    n = None
    edges: List[Tuple[int, int]] = []
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphParseError("duplicate problem line", line_number)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise GraphParseError(f"malformed header {line!r}, expected 'p edge n m'", line_number)
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphParseError(f"non-integer counts in header {line!r}", line_number) from None
            if n < 0 or declared_m < 0:
                raise GraphParseError("negative counts in header", line_number)
        elif tag == "e":
            if n is None:
                raise GraphParseError("edge line before the 'p edge' header", line_number)
            if len(parts) != 3:
                raise GraphParseError(f"malformed edge line {line!r}", line_number)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError(f"non-integer vertex in {line!r}", line_number) from None
            for w in (u, v):
                if not 1 <= w <= n:
                    raise GraphParseError(f"vertex {w} out of range 1..{n}", line_number)
            if u == v:
                raise GraphParseError(f"loop edge at vertex {u}", line_number)
            edges.append((u, v))
        else:
            raise GraphParseError(f"unknown line type {tag!r}", line_number)

    if n is None:
        raise GraphParseError("missing 'p edge n m' header")
    g = Graph.from_edges(n, edges)
    if g.m != len(edges):
        logging.debug(f"Merged {len(edges) - g.m} duplicate edges")
    return g


def serialize_graph(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def load_graph(path: Union[str, Path]) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise GraphParseError(f"cannot read graph file {path}: {e}") from e
    return parse_graph(text)
