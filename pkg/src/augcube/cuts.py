"""Explicit optimal-cut constructions on AQ_n and their certification.

* ``kappa2_candidate_cut``: ``S = N(P)`` for the path ``P = (X̄_i, X, X̄_{i+2})``,
  ``|S| = 6n - 17``.
* ``lambda2_candidate_cut``: boundary of the triangle ``{X, X_1, X̄_2}``,
  ``|F| = 6n - 9``.
* ``super_vertex_cut`` / ``super_edge_cut``: neighbourhood and boundary of a
  single edge, sizes ``4n - 8`` (complement edge of dimension ``2..n-1``)
  and ``4n - 4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from augcube.core import EdgeKind, adjacency_of, check_dim, check_vertex, comp_neighbor, hyper_neighbor
from augcube.errors import ArgumentError, UnsupportedDimension
from augcube.flow import ConnKind
from augcube.neighborhood import PathTriple, edge_boundary, neighborhood_of_set, path2_class
from augcube.unionfind import UnionFind


@dataclass(frozen=True)
class CutCertificate:
    kind: ConnKind
    members: tuple
    component_sizes: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def disconnected(self) -> bool:
        return len(self.component_sizes) > 1

    @property
    def min_component(self) -> int:
        return self.component_sizes[0] if self.component_sizes else 0

    def h_extra_valid(self, h: int) -> bool:
        return self.disconnected and self.min_component > h

    def summary(self, h: int | None = None) -> dict:
        out = {
            "kind": self.kind,
            "size": self.size,
            "component_sizes": list(self.component_sizes),
            "disconnected": self.disconnected,
            "min_component": self.min_component,
        }
        if h is not None:
            out["h"] = h
            out["h_extra_valid"] = self.h_extra_valid(h)
        return out


def validate_cut(graph, members: Iterable, kind: ConnKind, h: int | None = None) -> CutCertificate:
    """Remove ``members`` from ``graph`` and record the component census.

    ``h`` is accepted for symmetry with the engines; validity for any level
    is read from :meth:`CutCertificate.h_extra_valid`.
    """
    adj = adjacency_of(graph)
    nv = len(adj)
    uf = UnionFind(nv)
    if kind == "vertex":
        gone = set()
        for v in members:
            if not (isinstance(v, int) and 0 <= v < nv):
                raise ArgumentError(f"vertex {v!r} is not in the graph")
            gone.add(v)
        for u, nbrs in enumerate(adj):
            if u in gone:
                continue
            for v in nbrs:
                if u < v and v not in gone:
                    uf.union(u, v)
        sizes = uf.component_sizes(v for v in range(nv) if v not in gone)
        return CutCertificate("vertex", tuple(sorted(gone)), tuple(sizes))
    if kind == "edge":
        cut = set()
        for e in members:
            u, v = e
            if not (0 <= u < nv and v in adj[u]):
                raise ArgumentError(f"edge {e!r} is not in the graph")
            cut.add((min(u, v), max(u, v)))
        for u, nbrs in enumerate(adj):
            for v in nbrs:
                if u < v and (u, v) not in cut:
                    uf.union(u, v)
        sizes = uf.component_sizes(range(nv))
        return CutCertificate("edge", tuple(sorted(cut)), tuple(sizes))
    raise ArgumentError(f"unknown connectivity kind {kind!r}")


def kappa2_candidate_cut(n: int, x: int = 0, i: int = 2) -> tuple[PathTriple, frozenset[int]]:
    if n < 5:
        raise UnsupportedDimension(f"the 2-path construction needs n >= 5, got {n}")
    check_dim(n)
    check_vertex(x, n)
    if not 2 <= i <= n - 3:
        raise ArgumentError(f"i must lie in 2..{n - 3}, got {i}")
    p = PathTriple(x, (comp_neighbor(x, i, n), comp_neighbor(x, i + 2, n)))
    cls = path2_class(p, n)
    assert cls.key == "CC:j=i+2,j<n", cls
    return p, frozenset(neighborhood_of_set(p.vertices, n))


def lambda2_candidate_cut(n: int, x: int = 0) -> tuple[tuple[int, int, int], frozenset[tuple[int, int]]]:
    if n < 4:
        raise UnsupportedDimension(f"the triangle construction is claimed for n >= 4, got {n}")
    check_dim(n)
    check_vertex(x, n)
    tri = (x, hyper_neighbor(x, 1, n), comp_neighbor(x, 2, n))
    return tri, frozenset(edge_boundary(tri, n))


def super_vertex_cut(n: int, x: int, kind: EdgeKind) -> frozenset[int]:
    """``N({X, Y})`` for a complement edge of dimension ``2..n-1`` (4 common neighbours)."""
    check_dim(n)
    if kind.is_hypercube or not 2 <= kind.dim <= n - 1:
        raise ArgumentError(f"vertex variant needs Complement(i), 2 <= i <= n-1; got {kind}")
    y = kind.endpoint(x, n)
    return frozenset(neighborhood_of_set((x, y), n))


def super_edge_cut(n: int, x: int, kind: EdgeKind) -> frozenset[tuple[int, int]]:
    check_dim(n)
    y = kind.endpoint(x, n)
    return frozenset(edge_boundary((x, y), n))


def super_cut_candidates(n: int, x: int, kind: EdgeKind) -> tuple[frozenset[int], frozenset[tuple[int, int]]]:
    return super_vertex_cut(n, x, kind), super_edge_cut(n, x, kind)
