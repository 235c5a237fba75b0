"""Unit-capacity flow networks for local (s-t) vertex and edge connectivity.

Max-flow itself is delegated to :func:`scipy.sparse.csgraph.maximum_flow`;
the minimum cut is read off the residual network.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, maximum_flow

from augcube.core import adjacency_of
from augcube.errors import ArgumentError

ConnKind = Literal["vertex", "edge"]


@dataclass(frozen=True)
class FlowInstance:
    """Directed network derived from an undirected graph.

    Vertex kind: ``v`` splits into ``v_in = 2v`` and ``v_out = 2v + 1`` joined
    by a unit arc; every graph edge ``uv`` becomes ``u_out -> v_in`` and
    ``v_out -> u_in`` with capacity ``|V|`` so only split arcs are ever cut.
    Edge kind: each edge becomes two opposite unit arcs.
    """

    kind: ConnKind
    num_vertices: int
    capacity: csr_matrix

    @classmethod
    def from_graph(cls, graph, kind: ConnKind) -> FlowInstance:
        adj = adjacency_of(graph)
        nv = len(adj)
        rows, cols, caps = [], [], []
        if kind == "vertex":
            for v, nbrs in enumerate(adj):
                rows.append(2 * v)
                cols.append(2 * v + 1)
                caps.append(1)
                for u in nbrs:
                    rows.append(2 * v + 1)
                    cols.append(2 * u)
                    caps.append(nv)
            size = 2 * nv
        elif kind == "edge":
            for v, nbrs in enumerate(adj):
                for u in nbrs:
                    rows.append(v)
                    cols.append(u)
                    caps.append(1)
            size = nv
        else:
            raise ArgumentError(f"unknown connectivity kind {kind!r}")
        cap = csr_matrix(
            (np.asarray(caps, dtype=np.int32), (np.asarray(rows), np.asarray(cols))),
            shape=(size, size),
        )
        return cls(kind, nv, cap)

    def terminals(self, s: int, t: int) -> tuple[int, int]:
        if self.kind == "vertex":
            return 2 * s + 1, 2 * t
        return s, t

    def max_flow(self, s: int, t: int) -> int:
        src, sink = self.terminals(s, t)
        return int(maximum_flow(self.capacity, src, sink).flow_value)

    def min_cut(self, s: int, t: int) -> tuple[int, tuple]:
        """Flow value and the source-side minimum cut (vertices or ``(u, v)`` edges)."""
        src, sink = self.terminals(s, t)
        res = maximum_flow(self.capacity, src, sink)
        residual = (self.capacity - res.flow).tocsr()
        residual.data = np.where(residual.data > 0, 1, 0).astype(np.int32)
        residual.eliminate_zeros()
        reach = np.zeros(self.capacity.shape[0], dtype=bool)
        reach[breadth_first_order(residual, src, directed=True, return_predecessors=False)] = True
        if self.kind == "vertex":
            cut = tuple(v for v in range(self.num_vertices) if reach[2 * v] and not reach[2 * v + 1])
        else:
            coo = self.capacity.tocoo()
            cut = tuple(
                sorted(
                    (min(u, v), max(u, v))
                    for u, v in zip(coo.row.tolist(), coo.col.tolist())
                    if reach[u] and not reach[v]
                )
            )
        return int(res.flow_value), cut
