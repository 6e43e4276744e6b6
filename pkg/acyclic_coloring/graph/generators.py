"""Deterministic generators for the graph families used as test and bench corpus."""

import logging
from collections import defaultdict
from fractions import Fraction
from typing import Any, Dict, Mapping, Optional, Set, Tuple

from acyclic_coloring.data.structures import GraphFamily
from acyclic_coloring.engine.rng import Pcg32
from acyclic_coloring.errors import GenerationError
from acyclic_coloring.graph.core import Graph
from acyclic_coloring.utils.log_icon import icon

DEFAULT_MAX_RETRIES = 1000


def _require_int(params: Mapping[str, Any], key: str, family: GraphFamily, minimum: int = 0) -> int:
    if params.get(key) is None:
        raise GenerationError(f"{family.value} needs parameter '{key}'")
    try:
        value = int(params[key])
    except (TypeError, ValueError):
        raise GenerationError(f"{family.value}: '{key}' must be an integer, got {params[key]!r}") from None
    if value < minimum:
        raise GenerationError(f"{family.value}: '{key}' must be at least {minimum}, got {value}")
    return value


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GenerationError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, i % n + 1) for i in range(1, n + 1)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(1, n)))


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, ())


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """K_{a,b}: left side 1..a, right side a+1..a+b."""
    return Graph.from_edges(a + b, ((u, v) for u in range(1, a + 1) for v in range(a + 1, a + b + 1)))


def hypercube_graph(dim: int) -> Graph:
    """Q_dim: vertex i+1 is the bit string i, adjacent when the strings differ in one bit."""
    n = 1 << dim
    return Graph.from_edges(n, ((i + 1, (i ^ (1 << bit)) + 1) for i in range(n) for bit in range(dim) if i < i ^ (1 << bit)))


def random_regular_graph(n: int, d: int, rng: Pcg32, max_retries: int = DEFAULT_MAX_RETRIES) -> Graph:
    """Uniform-ish d-regular graph by the pairing model with repair rounds.

    Raises:
        GenerationError: n*d odd, d >= n, or no simple graph found within max_retries attempts
    """
    if (n * d) % 2 != 0:
        raise GenerationError(f"random_regular needs n*d even, got n={n}, d={d}")
    if not 0 <= d < n:
        raise GenerationError(f"random_regular needs 0 <= d < n, got n={n}, d={d}")

    def _suitable(edges: Set[Tuple[int, int]], potential_edges: Dict[int, int]) -> bool:
        # at least one leftover pair must still be joinable
        if not potential_edges:
            return True
        nodes = sorted(potential_edges)
        for i, s1 in enumerate(nodes):
            for s2 in nodes[i + 1:]:
                if (s1, s2) not in edges:
                    return True
        return False

    def _try_creation() -> Optional[Set[Tuple[int, int]]]:
        edges: Set[Tuple[int, int]] = set()
        stubs = [v for v in range(1, n + 1) for _ in range(d)]
        while stubs:
            potential_edges: Dict[int, int] = defaultdict(int)
            rng.shuffle(stubs)
            stubiter = iter(stubs)
            for s1, s2 in zip(stubiter, stubiter):
                if s1 > s2:
                    s1, s2 = s2, s1
                if s1 != s2 and (s1, s2) not in edges:
                    edges.add((s1, s2))
                else:
                    potential_edges[s1] += 1
                    potential_edges[s2] += 1
            if not _suitable(edges, potential_edges):
                return None
            stubs = [node for node in sorted(potential_edges) for _ in range(potential_edges[node])]
        return edges

    for attempt in range(1, max_retries + 1):
        edges = _try_creation()
        if edges is not None:
            logging.debug(f"random_regular(n={n}, d={d}) built on attempt {attempt}")
            return Graph.from_edges(n, sorted(edges))
    raise GenerationError(f"random_regular(n={n}, d={d}) failed after {max_retries} attempts")


def erdos_renyi_graph(n: int, p: Fraction, rng: Pcg32) -> Graph:
    """G(n, p) with each pair (u < v) drawn in lexicographic order, p exact."""
    if not 0 <= p <= 1:
        raise GenerationError(f"erdos_renyi needs 0 <= p <= 1, got {p}")
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.randbelow(p.denominator) < p.numerator:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


def generate_family(
    family: GraphFamily,
    params: Optional[Mapping[str, Any]] = None,
    seed: int = 0,
    max_retries: int = DEFAULT_MAX_RETRIES,
) -> Graph:
    """Build a member of ``family``.

    Parameters by family: cycle/path/empty/complete take ``n``; complete_bipartite takes
    ``a`` and ``b``; hypercube takes ``dim``; random_regular takes ``n`` and ``d``;
    erdos_renyi takes ``n`` and ``p`` (decimal or fraction string). Only the random
    families read ``seed``.
    """
    family = GraphFamily(family)
    params = dict(params or {})

    if family == GraphFamily.CYCLE:
        g = cycle_graph(_require_int(params, "n", family, 3))
    elif family == GraphFamily.PATH:
        g = path_graph(_require_int(params, "n", family, 0))
    elif family == GraphFamily.EMPTY:
        g = empty_graph(_require_int(params, "n", family, 0))
    elif family == GraphFamily.COMPLETE:
        g = complete_graph(_require_int(params, "n", family, 0))
    elif family == GraphFamily.COMPLETE_BIPARTITE:
        g = complete_bipartite_graph(_require_int(params, "a", family, 0), _require_int(params, "b", family, 0))
    elif family == GraphFamily.HYPERCUBE:
        g = hypercube_graph(_require_int(params, "dim", family, 0))
    elif family == GraphFamily.RANDOM_REGULAR:
        g = random_regular_graph(
            _require_int(params, "n", family, 1), _require_int(params, "d", family, 0), Pcg32(seed), max_retries
        )
    else:
        if params.get("p") is None:
            raise GenerationError("erdos_renyi needs parameter 'p'")
        try:
            p = Fraction(str(params["p"]))
        except (ValueError, ZeroDivisionError):
            raise GenerationError(f"erdos_renyi: 'p' must be a decimal or fraction, got {params['p']!r}") from None
        g = erdos_renyi_graph(_require_int(params, "n", family, 0), p, Pcg32(seed))

    logging.info(f"{icon['check']} Generated {family.value} graph: n={g.n}, m={g.m}, max degree={g.max_degree}")
    return g
