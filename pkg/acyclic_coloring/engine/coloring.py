import heapq
from collections import defaultdict
from typing import Dict, List, Optional, Sequence, Tuple

from acyclic_coloring.errors import InvariantViolation, VerificationInputError
from acyclic_coloring.graph.core import Graph
from acyclic_coloring.graph.dangerous import DangerousSets
from acyclic_coloring.oracle.union_find import UnionFind


class PartialColoring:
    """Vertex -> optional color for vertices 1..n.

    Mutable; the engine updates it in place step by step. ``copy`` before keeping a snapshot.
    """

    def __init__(self, n: int, colors: Optional[Sequence[Optional[int]]] = None):
        self.n = n
        self._colors: List[Optional[int]] = [None] * (n + 1)
        self.colored_count = 0
        # min-heap of uncolored vertices, lazily cleaned
        self._uncolored_heap: List[int] = list(range(1, n + 1))
        if colors is not None:
            if len(colors) != n:
                raise VerificationInputError(f"coloring has {len(colors)} entries, graph has {n} vertices")
            for v, x in enumerate(colors, start=1):
                if x is not None:
                    self.set(v, x)

    @classmethod
    def from_mapping(cls, n: int, mapping: Dict[int, int]) -> "PartialColoring":
        c = cls(n)
        for v, x in mapping.items():
            c.set(v, x)
        return c

    def copy(self) -> "PartialColoring":
        other = PartialColoring(self.n)
        other._colors = list(self._colors)
        other.colored_count = self.colored_count
        other._uncolored_heap = [v for v in self._uncolored_heap if self._colors[v] is None]
        heapq.heapify(other._uncolored_heap)
        return other

    def __getitem__(self, v: int) -> Optional[int]:
        return self._colors[v]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialColoring):
            return NotImplemented
        return self.n == other.n and self._colors == other._colors

    def __repr__(self) -> str:
        return f"PartialColoring({self.as_dict()})"

    def is_colored(self, v: int) -> bool:
        return self._colors[v] is not None

    def set(self, v: int, color: int):
        if not 1 <= v <= self.n:
            raise VerificationInputError(f"vertex {v} outside 1..{self.n}")
        if not isinstance(color, int) or isinstance(color, bool) or color < 1:
            raise VerificationInputError(f"color of vertex {v} must be a positive integer, got {color!r}")
        if self._colors[v] is None:
            self.colored_count += 1
        self._colors[v] = color

    def unset(self, v: int):
        if self._colors[v] is not None:
            self._colors[v] = None
            self.colored_count -= 1
            heapq.heappush(self._uncolored_heap, v)

    def smallest_uncolored(self) -> Optional[int]:
        heap = self._uncolored_heap
        while heap and self._colors[heap[0]] is not None:
            heapq.heappop(heap)
        return heap[0] if heap else None

    def uncolored_vertices(self) -> List[int]:
        return [v for v in range(1, self.n + 1) if self._colors[v] is None]

    @property
    def complete(self) -> bool:
        return self.colored_count == self.n

    def colors_used(self) -> int:
        return len({x for x in self._colors[1:] if x is not None})

    def as_dict(self) -> Dict[int, int]:
        return {v: x for v, x in enumerate(self._colors) if x is not None}

    def to_list(self) -> List[Optional[int]]:
        """JSON form: entry i is the color of vertex i+1, None when uncolored."""
        return list(self._colors[1:])

    def audit(self, g: Graph, dsets: Optional[DangerousSets] = None):
        """Check properness, bicolored forests and dangerous pairs.

        Raises:
            InvariantViolation: on the first violated condition
        """
        edge = monochromatic_edge(g, self)
        if edge is not None:
            raise InvariantViolation(f"edge {edge} is monochromatic")
        if dsets is not None:
            for u, v in dsets.pairs():
                if self._colors[u] is not None and self._colors[u] == self._colors[v]:
                    raise InvariantViolation(f"dangerous pair ({u}, {v}) shares color {self._colors[u]}")
        closing = bichromatic_cycle_edge(g, self)
        if closing is not None:
            raise InvariantViolation(f"edge {closing[0]} closes a cycle in color classes {closing[1]}")


def monochromatic_edge(g: Graph, c: PartialColoring) -> Optional[Tuple[int, int]]:
    for u, v in g.edges():
        if c[u] is not None and c[u] == c[v]:
            return u, v
    return None


def color_pair_edges(g: Graph, c: PartialColoring) -> Dict[Tuple[int, int], List[Tuple[int, int]]]:
    """Edges grouped by the (smaller, larger) color pair of their endpoints, skipping uncolored ends."""
    groups: Dict[Tuple[int, int], List[Tuple[int, int]]] = defaultdict(list)
    for u, v in g.edges():
        x, y = c[u], c[v]
        if x is None or y is None or x == y:
            continue
        groups[(min(x, y), max(x, y))].append((u, v))
    return groups


def bichromatic_cycle_edge(g: Graph, c: PartialColoring) -> Optional[Tuple[Tuple[int, int], Tuple[int, int]]]:
    """First edge closing a cycle inside some two-color subgraph, with its color pair."""
    for pair, edges in sorted(color_pair_edges(g, c).items()):
        uf = UnionFind()
        for u, v in edges:
            if not uf.union(u, v):
                return (u, v), pair
    return None
