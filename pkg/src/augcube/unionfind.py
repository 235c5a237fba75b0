"""Disjoint sets with path halving and union by size."""

from collections import Counter


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        return True

    def component_sizes(self, members) -> list[int]:
        """Sorted sizes of the classes meeting ``members``."""
        counts = Counter(self.find(v) for v in members)
        return sorted(counts.values())

    def __repr__(self) -> str:
        return f"UnionFind({self.parent})"


def component_sizes(adjacency, removed_vertices=(), removed_edges=()) -> list[int]:
    """Sorted component orders of ``G - removed``."""
    gone = set(removed_vertices)
    cut = {(min(u, v), max(u, v)) for u, v in removed_edges}
    uf = UnionFind(len(adjacency))
    for u, nbrs in enumerate(adjacency):
        if u in gone:
            continue
        for v in nbrs:
            if u < v and v not in gone and (u, v) not in cut:
                uf.union(u, v)
    return uf.component_sizes(v for v in range(len(adjacency)) if v not in gone)


def mask_components(masks, alive: int) -> list[int]:
    """Component orders of the subgraph induced on the bitmask ``alive``.

    ``masks[v]`` is the neighbour bitmask of ``v``. Sizes come back sorted.
    """
    sizes = []
    rest = alive
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            grow = 0
            f = frontier
            while f:
                b = f & -f
                grow |= masks[b.bit_length() - 1]
                f ^= b
            frontier = grow & rest & ~comp
            comp |= frontier
        sizes.append(comp.bit_count())
        rest &= ~comp
    sizes.sort()
    return sizes
