"""One EXTEND step: color the smallest uncolored vertex, or uncolor a bichromatic cycle."""

import logging
from collections import deque
from typing import TYPE_CHECKING, Iterable, List, Optional, Set, Tuple

from acyclic_coloring.data.structures import CycleId, OutcomeKind, StepOutcome
from acyclic_coloring.engine.coloring import PartialColoring
from acyclic_coloring.engine.rng import Sampler
from acyclic_coloring.errors import CandidateListError, InvariantViolation
from acyclic_coloring.graph.core import Graph
from acyclic_coloring.graph.dangerous import DangerousSets
from acyclic_coloring.params.algo_params import AlgoParams

if TYPE_CHECKING:
    from acyclic_coloring.records.catalog import CycleCatalog


def candidate_list(c: PartialColoring, v: int, params: AlgoParams, dsets: DangerousSets, g: Graph) -> List[int]:
    """The ℓ smallest colors of 1..P not used on N(v) or D(v).

    Raises:
        CandidateListError: fewer than ℓ colors remain (only possible in tight mode)
    """
    if c.is_colored(v):
        raise InvariantViolation(f"candidate list requested for colored vertex {v}")
    excluded = {c[w] for w in g.adjacency[v]}
    excluded.update(c[w] for w in dsets[v])
    ell = params.list_size
    colors = []
    for x in range(1, params.palette + 1):
        if x not in excluded:
            colors.append(x)
            if len(colors) == ell:
                return colors
    raise CandidateListError(
        f"vertex {v}: only {len(colors)} of {ell} colors available from a palette of {params.palette} "
        f"({params.mode.value} mode)"
    )


def _tree_paths(c: PartialColoring, g: Graph, source: int, targets: Iterable[int], x: int, y: int) -> dict:
    """BFS in the {x, y}-colored forest from ``source``; returns target -> path source..target."""
    parent = {source: None}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if w not in parent and c[w] in (x, y):
                parent[w] = u
                queue.append(w)
    paths = {}
    for t in targets:
        if t in parent:
            path = [t]
            while parent[path[-1]] is not None:
                path.append(parent[path[-1]])
            path.reverse()
            paths[t] = tuple(path)
    return paths


def find_bichromatic_cycles(c: PartialColoring, v: int, x: int, g: Graph) -> Set[CycleId]:
    """Identifiers of all cycles through v that become two-colored once v gets color x.

    Since c is acyclic, each {x, y} subgraph is a forest and any two y-colored neighbors of v
    in one tree close exactly one cycle through v.
    """
    by_color = {}
    for u in g.adjacency[v]:
        y = c[u]
        if y is not None:
            by_color.setdefault(y, []).append(u)
    if x in by_color:
        raise InvariantViolation(f"color {x} already appears on a neighbor of {v}")

    cycles: Set[CycleId] = set()
    for y, ends in by_color.items():
        if len(ends) < 2:
            continue
        # adjacency lists are sorted, so ends is increasing
        for i, u1 in enumerate(ends[:-1]):
            for path in _tree_paths(c, g, u1, ends[i + 1:], x, y).values():
                cycles.add(path)
    return cycles


def select_uncolor_target(cycles: Iterable[CycleId]) -> CycleId:
    """Longest cycle, ties broken by the lexicographically smallest identifier."""
    cycles = list(cycles)
    if not cycles:
        raise InvariantViolation("no cycle to uncolor")
    return min(cycles, key=lambda ident: (-len(ident), ident))


def extend_step(
    c: PartialColoring,
    rng: Sampler,
    params: AlgoParams,
    dsets: DangerousSets,
    g: Graph,
    catalog: Optional["CycleCatalog"] = None,
) -> Tuple[PartialColoring, StepOutcome]:
    """Run one step on c in place and return it with the outcome.

    When ``catalog`` is given, the 1-based index z of the uncolored cycle in C_2k(v) is filled in.
    """
    v = c.smallest_uncolored()
    if v is None:
        raise InvariantViolation("extend_step called on a complete coloring")

    colors = candidate_list(c, v, params, dsets, g)
    x = colors[rng.randbelow(len(colors))]

    cycles = find_bichromatic_cycles(c, v, x, g)
    if not cycles:
        c.set(v, x)
        return c, StepOutcome(vertex=v, color=x, kind=OutcomeKind.KEPT)

    target = select_uncolor_target(cycles)
    k = (len(target) + 1) // 2
    # w2 and w3 keep their colors
    for w in target[2:]:
        c.unset(w)

    z = None
    if catalog is not None:
        index = catalog.index_of(v, k, target)
        if index is None:
            raise InvariantViolation(f"uncolored cycle {target} through {v} is missing from C_{2 * k}({v})")
        z = index + 1
    logging.debug(f"Vertex {v} color {x}: uncolored {2 * k}-cycle {target} (z={z})")
    return c, StepOutcome(vertex=v, color=x, kind=OutcomeKind.UNCOLORED, cycle_identifier=target, k=k, z=z)
