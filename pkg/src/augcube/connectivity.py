"""Exact classical and h-extra connectivity on materialized graphs.

``vertex_connectivity`` / ``edge_connectivity`` run Menger max-flow between
selected terminal pairs. ``extra_conn_exhaustive`` enumerates subsets and is
limited to 16 vertices. ``extra_conn_fragment`` is a branch-and-bound over
connected vertex sets ``A`` whose edge boundary is the candidate cut.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from itertools import combinations

from augcube.core import AugCube, adjacency_of
from augcube.errors import ArgumentError, CapacityError
from augcube.flow import ConnKind, FlowInstance
from augcube.unionfind import component_sizes, mask_components

EXHAUSTIVE_MAX_VERTICES = 16
FRAGMENT_MAX_VERTICES = 4096
DEFAULT_TIMEOUT = 300.0


@dataclass
class ConnectivityResult:
    value: int | None
    certificate: tuple | None = None
    method: str = "flow"
    kind: ConnKind = "vertex"
    h: int = 0
    exact: bool = True
    complete_graph: bool = False
    nodes: int = 0
    elapsed: float = field(default=0.0, compare=False)

    def summary(self) -> dict:
        """Deterministic fields only."""
        return {
            "value": self.value,
            "certificate": _jsonable(self.certificate),
            "method": self.method,
            "kind": self.kind,
            "h": self.h,
            "exact": self.exact,
            "complete_graph": self.complete_graph,
            "nodes": self.nodes,
        }


def _jsonable(cert):
    if cert is None:
        return None
    return [list(c) if isinstance(c, tuple) else c for c in cert]


class _Timeout(Exception):
    pass


def _masks(graph) -> tuple[int, ...]:
    masks = getattr(graph, "masks", None)
    if masks is not None:
        return masks
    out = []
    for nbrs in adjacency_of(graph):
        m = 0
        for v in nbrs:
            m |= 1 << v
        out.append(m)
    return tuple(out)


def _is_complete(adj) -> bool:
    k = len(adj) - 1
    return all(len(a) == k for a in adj)


def menger_local(graph, s: int, t: int, kind: ConnKind = "vertex", flow: FlowInstance | None = None):
    """Minimum s-t vertex (or edge) cut by max-flow."""
    adj = adjacency_of(graph)
    nv = len(adj)
    if not (0 <= s < nv and 0 <= t < nv) or s == t:
        raise ArgumentError(f"need two distinct vertices in 0..{nv - 1}, got {s}, {t}")
    if kind == "vertex" and t in adj[s]:
        raise ArgumentError(f"vertex cut undefined for adjacent terminals {s}, {t}")
    t0 = time.perf_counter()
    flow = flow or FlowInstance.from_graph(graph, kind)
    value, cut = flow.min_cut(s, t)
    return ConnectivityResult(value, cut, "flow", kind, 0, nodes=1, elapsed=time.perf_counter() - t0)


def vertex_connectivity(graph) -> ConnectivityResult:
    """kappa(G): min s-t vertex cut over s in {v0} ∪ N(v0), t non-adjacent to s.

    A complete graph has no vertex cut; it gets the conventional ``|V| - 1``
    with ``complete_graph`` set. A disconnected graph gives 0.
    """
    t0 = time.perf_counter()
    adj = adjacency_of(graph)
    nv = len(adj)
    if _is_complete(adj):
        return ConnectivityResult(nv - 1, None, "flow", "vertex", complete_graph=True)
    if len(component_sizes(adj)) > 1:
        return ConnectivityResult(0, (), "flow", "vertex")
    flow = FlowInstance.from_graph(graph, "vertex")
    best, best_pair, calls = None, None, 0
    for s in (0, *adj[0]):
        near = set(adj[s])
        for t in range(nv):
            if t == s or t in near:
                continue
            calls += 1
            val = flow.max_flow(s, t)
            if best is None or val < best:
                best, best_pair = val, (s, t)
    _, cut = flow.min_cut(*best_pair)
    return ConnectivityResult(best, cut, "flow", "vertex", nodes=calls, elapsed=time.perf_counter() - t0)


def edge_connectivity(graph) -> ConnectivityResult:
    """lambda(G): min s-t edge cut from vertex 0 to every other vertex."""
    t0 = time.perf_counter()
    adj = adjacency_of(graph)
    nv = len(adj)
    if nv < 2:
        raise ArgumentError("edge connectivity needs at least two vertices")
    if len(component_sizes(adj)) > 1:
        return ConnectivityResult(0, (), "flow", "edge")
    flow = FlowInstance.from_graph(graph, "edge")
    best, best_t = None, None
    for t in range(1, nv):
        val = flow.max_flow(0, t)
        if best is None or val < best:
            best, best_t = val, t
    _, cut = flow.min_cut(0, best_t)
    return ConnectivityResult(
        best, cut, "flow", "edge", complete_graph=_is_complete(adj), nodes=nv - 1,
        elapsed=time.perf_counter() - t0,
    )


def _check_h(h: int) -> None:
    if not isinstance(h, int) or h < 0:
        raise ArgumentError(f"extra level h must be a nonnegative int, got {h!r}")


def extra_conn_exhaustive(graph, h: int, kind: ConnKind, timeout: float = DEFAULT_TIMEOUT) -> ConnectivityResult:
    """kappa_h / lambda_h by full subset enumeration (at most 16 vertices).

    Vertex kind scans removal sets ``S`` by size, then lexicographically, so
    the first valid ``S`` is minimum and lexicographically smallest. Edge kind
    scans every bipartition ``(A, V - A)`` with all components of both sides
    larger than ``h`` and minimizes ``|∂A|``.
    """
    _check_h(h)
    adj = adjacency_of(graph)
    nv = len(adj)
    if nv > EXHAUSTIVE_MAX_VERTICES:
        raise CapacityError(f"exhaustive search is limited to {EXHAUSTIVE_MAX_VERTICES} vertices, got {nv}")
    if kind not in ("vertex", "edge"):
        raise ArgumentError(f"unknown connectivity kind {kind!r}")
    masks = _masks(graph)
    deadline = time.perf_counter() + timeout
    t0 = time.perf_counter()
    if kind == "vertex":
        res = _exhaustive_vertex(adj, masks, h, deadline)
    else:
        res = _exhaustive_edge(adj, masks, h, deadline)
    res.elapsed = time.perf_counter() - t0
    return res


def _exhaustive_vertex(adj, masks, h, deadline) -> ConnectivityResult:
    nv = len(adj)
    if _is_complete(adj):
        # no vertex set disconnects K_m; h = 0 takes the usual convention
        value = nv - 1 if h == 0 else None
        return ConnectivityResult(value, None, "exhaustive", "vertex", h, complete_graph=True)
    full = (1 << nv) - 1
    nodes = 0
    for k in range(0, nv - 2 * (h + 1) + 1):
        for combo in combinations(range(nv), k):
            nodes += 1
            if nodes & 1023 == 0 and time.perf_counter() > deadline:
                raise CapacityError("exhaustive search timed out")
            removed = 0
            for v in combo:
                removed |= 1 << v
            sizes = mask_components(masks, full & ~removed)
            if len(sizes) >= 2 and sizes[0] > h:
                return ConnectivityResult(k, combo, "exhaustive", "vertex", h, nodes=nodes)
    return ConnectivityResult(None, None, "exhaustive", "vertex", h, nodes=nodes)


def _boundary_edges(adj, a_mask: int) -> tuple[tuple[int, int], ...]:
    out = []
    for u, nbrs in enumerate(adj):
        if not (a_mask >> u) & 1:
            continue
        for v in nbrs:
            if not (a_mask >> v) & 1:
                out.append((min(u, v), max(u, v)))
    return tuple(sorted(out))


def _exhaustive_edge(adj, masks, h, deadline) -> ConnectivityResult:
    nv = len(adj)
    full = (1 << nv) - 1
    best, best_cert, nodes = None, None, 0
    # A always holds vertex 0; (A, V - A) and (V - A, A) are the same cut
    for rest in range((1 << (nv - 1)) - 1):
        nodes += 1
        if nodes & 4095 == 0 and time.perf_counter() > deadline:
            raise CapacityError("exhaustive search timed out")
        a = 1 | (rest << 1)
        b = full ^ a
        bnd = 0
        r = a
        while r:
            low = r & -r
            bnd += (masks[low.bit_length() - 1] & b).bit_count()
            r ^= low
        if best is not None and bnd > best:
            continue
        if mask_components(masks, a)[0] <= h or mask_components(masks, b)[0] <= h:
            continue
        cert = _boundary_edges(adj, a)
        if best is None or bnd < best or cert < best_cert:
            best, best_cert = bnd, cert
    return ConnectivityResult(best, best_cert, "exhaustive", "edge", h, nodes=nodes)


def extra_conn_fragment(
    graph,
    h: int,
    kind: ConnKind = "edge",
    size_cap: int | None = None,
    timeout: float = DEFAULT_TIMEOUT,
    roots=None,
) -> ConnectivityResult:
    """lambda_h by branch-and-bound over connected fragments.

    Some minimum h-extra edge cut is the boundary ``∂A`` of a connected set
    ``A`` with ``h < |A| <= |V|/2`` whose complement has no component of
    ``h`` or fewer vertices, so searching those ``A`` is exact once it
    completes with ``size_cap >= |V|//2``. On timeout the incumbent is
    returned with ``exact=False``.

    Each root ``r`` grows sets whose smallest vertex is ``r``. For an
    :class:`AugCube` the xor translations are automorphisms, so root 0 alone
    covers every fragment up to symmetry and is the default.

    Pruning: with ``X`` the vertices ruled out and ``F`` the undecided
    neighbours of ``A``, any extension keeps every ``A-X`` edge and at least
    ``e(A, F)`` minus what the best ``size_cap - |A|`` members of ``F`` can
    absorb.
    """
    _check_h(h)
    if kind != "edge":
        raise ArgumentError("fragment search supports the edge kind only")
    adj = adjacency_of(graph)
    nv = len(adj)
    if nv > FRAGMENT_MAX_VERTICES:
        raise CapacityError(f"fragment search is limited to {FRAGMENT_MAX_VERTICES} vertices, got {nv}")
    half = nv // 2
    cap = half if size_cap is None else min(size_cap, half)
    if roots is None:
        roots = [0] if isinstance(graph, AugCube) else range(nv)
    search = _FragmentSearch(adj, _masks(graph), h, time.perf_counter() + timeout)
    t0 = time.perf_counter()
    completed = True
    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, cap + 200))
    try:
        if h + 1 <= cap:
            # seed the incumbent with the smallest admissible fragments
            for r in roots:
                search.run_root(r, min(h + 1, cap))
            for r in roots:
                search.run_root(r, cap)
    except _Timeout:
        completed = False
    finally:
        sys.setrecursionlimit(old_limit)
    cert = _boundary_edges(adj, search.best_set) if search.best_set is not None else None
    return ConnectivityResult(
        search.best,
        cert,
        "fragment",
        "edge",
        h,
        exact=completed and cap >= half,
        nodes=search.nodes,
        elapsed=time.perf_counter() - t0,
    )


class _FragmentSearch:
    def __init__(self, adj, masks, h, deadline):
        self.adj = adj
        self.masks = masks
        self.deg = [len(a) for a in adj]
        self.h = h
        self.full = (1 << len(adj)) - 1
        self.deadline = deadline
        self.best: int | None = None
        self.best_set: int | None = None
        self.nodes = 0
        self.cap = 0

    def run_root(self, r: int, cap: int) -> None:
        self.cap = cap
        a = 1 << r
        excl = (1 << r) - 1
        frontier = self.masks[r] & ~excl & ~a
        cross = (self.masks[r] & excl).bit_count()
        self._consider(a, 1, self.deg[r])
        self._grow(a, 1, self.deg[r], frontier, excl, cross)

    def _consider(self, a: int, size: int, bnd: int) -> None:
        if size <= self.h or (self.best is not None and bnd >= self.best):
            return
        rest = self.full ^ a
        if not rest:
            return
        if mask_components(self.masks, rest)[0] > self.h:
            self.best, self.best_set = bnd, a

    def _lower_bound(self, a: int, size: int, bnd: int, frontier: int, cross: int) -> int:
        to_frontier = bnd - cross
        slots = self.cap - size
        if slots <= 0 or not frontier:
            return bnd
        gains = []
        f = frontier
        masks = self.masks
        while f:
            low = f & -f
            gains.append((masks[low.bit_length() - 1] & a).bit_count())
            f ^= low
        gains.sort(reverse=True)
        return cross + max(0, to_frontier - sum(gains[:slots]))

    def _grow(self, a, size, bnd, frontier, excl, cross) -> None:
        masks = self.masks
        while frontier:
            self.nodes += 1
            if self.nodes & 2047 == 0 and time.perf_counter() > self.deadline:
                raise _Timeout
            if size >= self.cap:
                return
            if self.best is not None:
                if cross >= self.best:
                    return
                if self._lower_bound(a, size, bnd, frontier, cross) >= self.best:
                    return
            vb = frontier & -frontier
            v = vb.bit_length() - 1
            frontier ^= vb
            mv = masks[v]
            a2 = a | vb
            bnd2 = bnd + self.deg[v] - 2 * (mv & a).bit_count()
            cross2 = cross + (mv & excl).bit_count()
            self._consider(a2, size + 1, bnd2)
            self._grow(a2, size + 1, bnd2, (frontier | mv) & ~a2 & ~excl, excl, cross2)
            excl |= vb
            cross += (mv & a).bit_count()
