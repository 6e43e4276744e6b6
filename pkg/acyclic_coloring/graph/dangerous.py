from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from acyclic_coloring.errors import ParameterError
from acyclic_coloring.graph.core import Graph
from acyclic_coloring.params.algo_params import kappa_constraint_holds, minimal_kappa


@dataclass(frozen=True)
class DangerousSets:
    """D(v) for every vertex: the vertices sharing at least κΔ^(2/3) neighbors with v."""

    delta: int
    kappa: Fraction
    sets: Tuple[Tuple[int, ...], ...]

    def __getitem__(self, v: int) -> Tuple[int, ...]:
        return self.sets[v]

    def is_dangerous(self, u: int, v: int) -> bool:
        return v in self.sets[u]

    def max_size(self) -> int:
        return max((len(d) for d in self.sets), default=0)

    def pairs(self):
        for u, d in enumerate(self.sets):
            for v in d:
                if u < v:
                    yield u, v


def effective_delta(g: Graph) -> int:
    """Δ used for parameters; the empty graph is treated as Δ = 1."""
    return max(g.max_degree, 1)


def is_dangerous_count(count: int, delta: int, kappa: Fraction) -> bool:
    """count ≥ κΔ^(2/3), decided as count³b³ ≥ a³Δ²; equality is dangerous."""
    return count ** 3 * kappa.denominator ** 3 >= kappa.numerator ** 3 * delta ** 2


def dangerous_set(g: Graph, kappa: Fraction, delta: Optional[int] = None) -> DangerousSets:
    """Compute every D(v) from common-neighbor counts.

    Raises:
        ParameterError: κ³Δ² < 8
    """
    delta = effective_delta(g) if delta is None else delta
    kappa = Fraction(kappa)
    if not kappa_constraint_holds(delta, kappa):
        raise ParameterError(
            f"kappa {float(kappa):.4f} violates kappa^3 * delta^2 >= 8 for delta={delta}",
            suggested_kappa=minimal_kappa(delta),
        )

    sets = [()]
    for v in g.vertices:
        counts: Dict[int, int] = {}
        for w in g.adjacency[v]:
            for u in g.adjacency[w]:
                if u != v:
                    counts[u] = counts.get(u, 0) + 1
        sets.append(tuple(sorted(u for u, c in counts.items() if is_dangerous_count(c, delta, kappa))))
    return DangerousSets(delta=delta, kappa=kappa, sets=tuple(sets))
