from typing import Dict, Hashable


class UnionFind:
    """Disjoint sets over arbitrary hashable keys, with path compression and union by size."""

    def __init__(self):
        self.forest: Dict[Hashable, Hashable] = {}
        self.size: Dict[Hashable, int] = {}

    def add(self, k):
        if k not in self.forest:
            self.forest[k] = k
            self.size[k] = 1
        return k

    def find(self, k):
        self.add(k)

        root = k
        while root != self.forest[root]:
            root = self.forest[root]

        # path compression
        node = k
        while node != root:
            self.forest[node], node = root, self.forest[node]

        return root

    def union(self, a, b) -> bool:
        """Merge the sets of a and b; False when they were already joined."""
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            return False
        if self.size[root_a] < self.size[root_b]:
            root_a, root_b = root_b, root_a
        self.forest[root_b] = root_a
        self.size[root_a] += self.size[root_b]
        return True

    def connected(self, a, b) -> bool:
        return self.find(a) == self.find(b)
