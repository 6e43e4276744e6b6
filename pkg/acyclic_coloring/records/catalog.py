"""Cycle catalogs C_2k(v) and their lexicographic ordering."""

import logging
import threading
from typing import Dict, Optional, Sequence, Tuple

from acyclic_coloring.data.structures import CycleId
from acyclic_coloring.errors import InvariantViolation
from acyclic_coloring.graph.core import Graph
from acyclic_coloring.graph.dangerous import DangerousSets


def cycle_identifier(cycle: Sequence[int]) -> CycleId:
    """Identifier of the cycle v, w2, ..., w2k: (w2, ..., w2k), reversed if w2 > w2k."""
    if len(cycle) < 4 or len(cycle) % 2:
        raise InvariantViolation(f"cycle {tuple(cycle)} must have even length >= 4")
    if len(set(cycle)) != len(cycle):
        raise InvariantViolation(f"cycle {tuple(cycle)} repeats a vertex")
    rest = tuple(cycle[1:])
    return rest if rest[0] < rest[-1] else rest[::-1]


def enumerate_catalog(g: Graph, dsets: DangerousSets, v: int, k: int) -> Tuple[CycleId, ...]:
    """All 2k-cycles through v whose vertices at distance two (cyclically) are not dangerous
    for each other, as sorted identifiers."""
    if k < 2:
        raise ValueError(f"catalogs exist for k >= 2, got {k}")
    length = 2 * k
    adj = g.adjacency
    found = []
    path = [v]
    on_path = {v}

    def dfs():
        depth = len(path)
        last = path[-1]
        if depth == length:
            # close back to v; cyclic distance-two pairs (w2k-1, v) and (w2k, w2)
            if path[1] < last and g.has_edge(last, v):
                if not dsets.is_dangerous(path[-2], v) and not dsets.is_dangerous(last, path[1]):
                    found.append(tuple(path[1:]))
            return
        for w in adj[last]:
            if w in on_path:
                continue
            if depth >= 2 and dsets.is_dangerous(path[-2], w):
                continue
            path.append(w)
            on_path.add(w)
            dfs()
            on_path.discard(w)
            path.pop()

    dfs()
    found.sort()
    return tuple(found)


class CycleCatalog:
    """Lazily built, thread-safe cache of C_2k(v) for one graph and one set of dangerous sets."""

    def __init__(self, g: Graph, dsets: DangerousSets):
        self.g = g
        self.dsets = dsets
        self._entries: Dict[Tuple[int, int], Tuple[CycleId, ...]] = {}
        self._index: Dict[Tuple[int, int], Dict[CycleId, int]] = {}
        self._lock = threading.Lock()

    def entries(self, v: int, k: int) -> Tuple[CycleId, ...]:
        key = (v, k)
        found = self._entries.get(key)
        if found is None:
            found = enumerate_catalog(self.g, self.dsets, v, k)
            with self._lock:
                if key not in self._entries:
                    self._entries[key] = found
                    self._index[key] = {ident: i for i, ident in enumerate(found)}
                    logging.debug(f"Catalog C_{2 * k}({v}) has {len(found)} cycles")
            found = self._entries[key]
        return found

    def size(self, v: int, k: int) -> int:
        return len(self.entries(v, k))

    def index_of(self, v: int, k: int, identifier: CycleId) -> Optional[int]:
        """0-based position of ``identifier`` in C_2k(v), or None."""
        self.entries(v, k)
        return self._index[(v, k)].get(tuple(identifier))

    def identifier_at(self, v: int, k: int, index: int) -> Optional[CycleId]:
        """Identifier at 0-based ``index`` of C_2k(v), or None when out of range."""
        found = self.entries(v, k)
        if 0 <= index < len(found):
            return found[index]
        return None
