from acyclic_coloring.graph.core import (
    Graph,
    common_neighbor_count,
    load_graph,
    parse_graph,
    serialize_graph,
)
from acyclic_coloring.graph.dangerous import DangerousSets, dangerous_set, effective_delta
from acyclic_coloring.graph.generators import generate_family

__all__ = [
    "DangerousSets",
    "Graph",
    "common_neighbor_count",
    "dangerous_set",
    "effective_delta",
    "generate_family",
    "load_graph",
    "parse_graph",
    "serialize_graph",
]
