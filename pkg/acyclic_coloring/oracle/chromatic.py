"""Ground truth for small graphs: exact acyclic chromatic number and the square-graph baseline."""

import logging
from typing import Optional

from acyclic_coloring.engine.coloring import PartialColoring
from acyclic_coloring.engine.extend import find_bichromatic_cycles
from acyclic_coloring.errors import InvariantViolation, OracleRefusal
from acyclic_coloring.graph.core import Graph
from acyclic_coloring.oracle.verify import verify_acyclic
from acyclic_coloring.utils.log_icon import icon

DEFAULT_BRUTE_FORCE_MAX_N = 9


def _extend(g: Graph, c: PartialColoring, v: int, k: int, highest: int) -> bool:
    """Backtracking over vertices in numeric order; colors above highest+1 are symmetric."""
    if v > g.n:
        return True
    neighbor_colors = {c[w] for w in g.adjacency[v]}
    for x in range(1, min(k, highest + 1) + 1):
        if x in neighbor_colors:
            continue
        # c is acyclic so far; v closes a bichromatic cycle iff two equal-colored
        # neighbors already share an {x, y} tree
        if find_bichromatic_cycles(c, v, x, g):
            continue
        c.set(v, x)
        if _extend(g, c, v + 1, k, max(highest, x)):
            return True
        c.unset(v)
    return False


def find_acyclic_coloring(g: Graph, k: int) -> Optional[PartialColoring]:
    """An acyclic coloring with colors 1..k, or None. Vertex 1 always gets color 1."""
    c = PartialColoring(g.n)
    if _extend(g, c, 1, k, 0):
        return c
    return None


def brute_force_chi_a(g: Graph, max_n: int = DEFAULT_BRUTE_FORCE_MAX_N) -> int:
    """Smallest k admitting an acyclic k-coloring.

    Raises:
        OracleRefusal: n > max_n
    """
    if g.n > max_n:
        raise OracleRefusal(f"brute force is limited to {max_n} vertices, graph has {g.n}")
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        c = find_acyclic_coloring(g, k)
        if c is not None:
            if not verify_acyclic(g, c).acyclic:
                raise InvariantViolation(f"backtracking produced a non-acyclic {k}-coloring")
            logging.debug(f"{icon['lightbulb']} acyclic chromatic number is {k} (n={g.n})")
            return k
    raise InvariantViolation("no acyclic coloring with n colors")


def square_greedy_baseline(g: Graph) -> PartialColoring:
    """Greedy proper coloring of G² in vertex order; every proper coloring of G² is acyclic for G."""
    c = PartialColoring(g.n)
    for v in g.vertices:
        taken = set()
        for w in g.adjacency[v]:
            taken.add(c[w])
            taken.update(c[u] for u in g.adjacency[w] if u != v)
        x = 1
        while x in taken:
            x += 1
        c.set(v, x)
    return c
