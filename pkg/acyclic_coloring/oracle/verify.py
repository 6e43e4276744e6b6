"""Acyclic-coloring checks: union-find per color pair, plus an independent DFS variant."""

from collections import defaultdict, deque
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from acyclic_coloring.data.structures import VerifyReport
from acyclic_coloring.engine.coloring import PartialColoring, color_pair_edges, monochromatic_edge
from acyclic_coloring.errors import VerificationInputError
from acyclic_coloring.graph.core import Graph
from acyclic_coloring.oracle.union_find import UnionFind

ColoringInput = Union[PartialColoring, Sequence[Optional[int]], Mapping[int, int]]


def as_full_coloring(g: Graph, coloring: ColoringInput) -> PartialColoring:
    """Accept a PartialColoring, a list (entry i is vertex i+1) or a vertex -> color mapping.

    Raises:
        VerificationInputError: wrong size, bad color or an uncolored vertex
    """
    if isinstance(coloring, PartialColoring):
        c = coloring
        if c.n != g.n:
            raise VerificationInputError(f"coloring covers {c.n} vertices, graph has {g.n}")
    elif isinstance(coloring, Mapping):
        c = PartialColoring.from_mapping(g.n, {int(v): x for v, x in coloring.items()})
    else:
        c = PartialColoring(g.n, list(coloring))
    missing = c.uncolored_vertices()
    if missing:
        raise VerificationInputError(f"vertices {missing[:10]} are uncolored")
    return c


def _forest_path(edges: List[Tuple[int, int]], source: int, target: int) -> List[int]:
    adj: Dict[int, List[int]] = defaultdict(list)
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    parent = {source: None}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            break
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def verify_acyclic(g: Graph, coloring: ColoringInput) -> VerifyReport:
    """Proper and acyclic check of a full coloring.

    The witness is the monochromatic edge when improper, otherwise the vertex sequence of a
    bichromatic cycle (closing edge implied).
    """
    c = as_full_coloring(g, coloring)
    used = c.colors_used()
    edge = monochromatic_edge(g, c)
    if edge is not None:
        return VerifyReport(proper=False, acyclic=False, witness=list(edge), colors_used=used)

    for _, edges in sorted(color_pair_edges(g, c).items()):
        uf = UnionFind()
        for i, (u, v) in enumerate(edges):
            if not uf.union(u, v):
                return VerifyReport(
                    proper=True, acyclic=False, witness=_forest_path(edges[:i], u, v), colors_used=used
                )
    return VerifyReport(proper=True, acyclic=True, colors_used=used)


def verify_acyclic_dfs(g: Graph, coloring: ColoringInput) -> VerifyReport:
    """Same verdict as ``verify_acyclic``, found by DFS back-edge detection per color pair."""
    c = as_full_coloring(g, coloring)
    used = c.colors_used()
    for u in g.vertices:
        for v in g.adjacency[u]:
            if c[u] == c[v]:
                return VerifyReport(proper=False, acyclic=False, witness=[min(u, v), max(u, v)], colors_used=used)

    colors = sorted({c[v] for v in g.vertices})
    for i, x in enumerate(colors):
        for y in colors[i + 1:]:
            cycle = _find_cycle(g, c, x, y)
            if cycle is not None:
                return VerifyReport(proper=True, acyclic=False, witness=cycle, colors_used=used)
    return VerifyReport(proper=True, acyclic=True, colors_used=used)


def _find_cycle(g: Graph, c: PartialColoring, x: int, y: int) -> Optional[List[int]]:
    seen: Dict[int, Optional[int]] = {}
    depth: Dict[int, int] = {}
    for root in g.vertices:
        if c[root] not in (x, y) or root in seen:
            continue
        seen[root] = None
        depth[root] = 0
        stack = [(root, iter(g.adjacency[root]))]
        while stack:
            u, it = stack[-1]
            advanced = False
            for w in it:
                if c[w] not in (x, y):
                    continue
                if w not in seen:
                    seen[w] = u
                    depth[w] = depth[u] + 1
                    stack.append((w, iter(g.adjacency[w])))
                    advanced = True
                    break
                if w != seen[u] and depth[w] < depth[u]:
                    # back edge u -> ancestor w
                    cycle = [u]
                    while cycle[-1] != w:
                        cycle.append(seen[cycle[-1]])
                    cycle.reverse()
                    return cycle
            if not advanced:
                stack.pop()
    return None
