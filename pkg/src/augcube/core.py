"""Augmented cube AQ_n: vertex labels, adjacency rules and graph construction.

A vertex ``X = x_n ... x_1`` is stored as a plain ``int`` whose bit ``i - 1``
holds ``x_i`` (least significant bit is ``x_1``). With that convention

* the hypercube neighbour ``X_i`` is ``X ^ (1 << (i - 1))``
* the complement neighbour ``X̄_i`` is ``X ^ ((1 << i) - 1)``

so every neighbour is ``X`` xor one of ``2n - 1`` fixed masks and AQ_n is a
Cayley graph on ``Z_2^n``: ``X -> X ^ c`` is an automorphism for every ``c``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Literal

from augcube.errors import ArgumentError, CapacityError, UnsupportedDimension

MAX_IMPLICIT_DIM = 30
MAX_MATERIALIZED_DIM = 20

Edge = tuple[int, int]


def check_dim(n: int, limit: int = MAX_IMPLICIT_DIM) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise ArgumentError(f"dimension must be an int, got {n!r}")
    if n < 1:
        raise ArgumentError(f"dimension must be >= 1, got {n}")
    if n > limit:
        raise CapacityError(f"dimension {n} exceeds the supported maximum {limit}")


def check_vertex(x: int, n: int) -> None:
    if not 0 <= x < (1 << n):
        raise ArgumentError(f"vertex {x} is not a label of AQ_{n}")


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise ArgumentError(f"dimension index {i} outside 1..{n}")


def hyper_neighbor(x: int, i: int, n: int) -> int:
    """Return ``X_i``: ``x`` with bit ``i`` flipped."""
    check_vertex(x, n)
    _check_index(i, n)
    return x ^ (1 << (i - 1))


def comp_neighbor(x: int, i: int, n: int) -> int:
    """Return ``X̄_i``: ``x`` with bits ``i, i-1, ..., 1`` flipped.

    Defined for ``i = 1`` as well, where it coincides with ``X_1``; only
    ``i >= 2`` gives a complement edge.
    """
    check_vertex(x, n)
    _check_index(i, n)
    return x ^ ((1 << i) - 1)


@lru_cache(maxsize=None)
def neighbor_masks(n: int) -> tuple[int, ...]:
    """Xor masks of the ``2n - 1`` neighbours (hypercube dims first, then complement dims)."""
    check_dim(n)
    hyper = [1 << (i - 1) for i in range(1, n + 1)]
    comp = [(1 << i) - 1 for i in range(2, n + 1)]
    return tuple(hyper + comp)


def neighbors(x: int, n: int) -> set[int]:
    check_vertex(x, n)
    return {x ^ m for m in neighbor_masks(n)}


def degree(n: int) -> int:
    return 2 * n - 1 if n >= 2 else 1


def num_edges(n: int) -> int:
    return (2 * n - 1) << (n - 1) if n >= 2 else 1


@dataclass(frozen=True, order=True)
class EdgeKind:
    """Type of an AQ_n edge seen from one endpoint.

    ``Complement(1)`` is not a valid kind: that pair is ``Hypercube(1)``.
    """

    kind: Literal["hypercube", "complement"]
    dim: int

    def __post_init__(self):
        if self.kind not in ("hypercube", "complement"):
            raise ArgumentError(f"unknown edge kind {self.kind!r}")
        low = 2 if self.kind == "complement" else 1
        if self.dim < low:
            raise ArgumentError(f"{self.kind} edges need dimension >= {low}, got {self.dim}")

    @classmethod
    def hypercube(cls, i: int) -> EdgeKind:
        return cls("hypercube", i)

    @classmethod
    def complement(cls, i: int) -> EdgeKind:
        return cls("complement", i)

    @property
    def is_hypercube(self) -> bool:
        return self.kind == "hypercube"

    @property
    def mask(self) -> int:
        return 1 << (self.dim - 1) if self.is_hypercube else (1 << self.dim) - 1

    def endpoint(self, x: int, n: int) -> int:
        if self.dim > n:
            raise ArgumentError(f"{self} is not an edge kind of AQ_{n}")
        check_vertex(x, n)
        return x ^ self.mask

    def __str__(self) -> str:
        return f"{'Hypercube' if self.is_hypercube else 'Complement'}({self.dim})"


def classify_edge(x: int, y: int, n: int) -> EdgeKind | None:
    """Classify the pair ``{x, y}``; ``None`` when the two are not adjacent.

    A pair differing only in bit 1 is reported as ``Hypercube(1)``.
    """
    check_vertex(x, n)
    check_vertex(y, n)
    d = x ^ y
    if d == 0:
        return None
    if d & (d - 1) == 0:
        return EdgeKind.hypercube(d.bit_length())
    if (d + 1) & d == 0:
        return EdgeKind.complement(d.bit_length())
    return None


class Half(enum.Enum):
    L = 0
    R = 1


def half(x: int, n: int) -> Half:
    if n < 2:
        raise UnsupportedDimension("AQ_1 has no halves")
    check_vertex(x, n)
    return Half((x >> (n - 1)) & 1)


def crossed_neighbors(x: int, n: int) -> tuple[int, int]:
    """The two neighbours of ``x`` in the opposite half: ``(X_n, X̄_n)``."""
    if n < 2:
        raise UnsupportedDimension("crossed edges need n >= 2")
    check_vertex(x, n)
    return x ^ (1 << (n - 1)), x ^ ((1 << n) - 1)


def _edges_from_adjacency(adjacency) -> Iterator[Edge]:
    for u, nbrs in enumerate(adjacency):
        for v in nbrs:
            if u < v:
                yield (u, v)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0..len(adjacency)-1``.

    Used for graphs read back from disk; engines accept it wherever they
    accept a materialized :class:`AugCube`.
    """

    adjacency: tuple[tuple[int, ...], ...]

    @property
    def num_vertices(self) -> int:
        return len(self.adjacency)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> Iterator[Edge]:
        return _edges_from_adjacency(self.adjacency)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return _adjacency_masks(self.adjacency)

    @property
    def is_complete(self) -> bool:
        k = self.num_vertices - 1
        return all(len(a) == k for a in self.adjacency)


@dataclass(frozen=True)
class AugCube:
    """AQ_n, implicit by default; ``build`` fills ``adjacency``."""

    n: int
    adjacency: tuple[tuple[int, ...], ...] | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        check_dim(self.n)

    @property
    def num_vertices(self) -> int:
        return 1 << self.n

    @property
    def num_edges(self) -> int:
        return num_edges(self.n)

    @property
    def materialized(self) -> bool:
        return self.adjacency is not None

    @property
    def is_complete(self) -> bool:
        # AQ_1 = K_2, AQ_2 = K_4
        return self.n <= 2

    def neighbors(self, x: int) -> set[int]:
        return neighbors(x, self.n)

    def edges(self) -> Iterator[Edge]:
        if self.adjacency is not None:
            return _edges_from_adjacency(self.adjacency)
        return iter(direct_edges(self.n))

    @cached_property
    def masks(self) -> tuple[int, ...]:
        if self.adjacency is None:
            raise ArgumentError("graph is not materialized; call build()")
        return _adjacency_masks(self.adjacency)


def _adjacency_masks(adjacency) -> tuple[int, ...]:
    out = []
    for nbrs in adjacency:
        m = 0
        for v in nbrs:
            m |= 1 << v
        out.append(m)
    return tuple(out)


def direct_edges(n: int) -> list[Edge]:
    """Sorted edge list from the adjacency rule."""
    check_dim(n)
    masks = neighbor_masks(n)
    return sorted({(x, x ^ m) for x in range(1 << n) for m in masks if x < x ^ m})


def recursive_edges(n: int) -> list[Edge]:
    """Sorted edge list from the two-copies-plus-crossed-edges construction."""
    check_dim(n)
    edges = {(0, 1)}
    for k in range(2, n + 1):
        top = 1 << (k - 1)
        low = top - 1
        nxt = set(edges)
        nxt.update((u | top, v | top) for u, v in edges)
        for x in range(top):
            nxt.add((x, x | top))
            nxt.add((x, (x ^ low) | top))
        edges = nxt
    return sorted(edges)


def build(n: int) -> AugCube:
    """Materialize AQ_n with sorted neighbour lists."""
    check_dim(n, MAX_MATERIALIZED_DIM)
    masks = neighbor_masks(n)
    adjacency = tuple(tuple(sorted(x ^ m for m in masks)) for x in range(1 << n))
    return AugCube(n, adjacency)


def adjacency_of(graph) -> tuple[tuple[int, ...], ...]:
    adj = getattr(graph, "adjacency", None)
    if adj is None:
        raise ArgumentError("graph is not materialized; call build()")
    return adj
