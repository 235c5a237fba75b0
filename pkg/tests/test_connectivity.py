from collections import deque
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from augcube.connectivity import (
    edge_connectivity,
    extra_conn_exhaustive,
    extra_conn_fragment,
    menger_local,
    vertex_connectivity,
)
from augcube.core import Graph, build
from augcube.cuts import validate_cut
from augcube.errors import ArgumentError, CapacityError
from augcube.graphio import export_graph, import_graph


def reachable(adj, s, removed_vertices=(), removed_edges=()):
    gone = set(removed_vertices)
    cut = {tuple(sorted(e)) for e in removed_edges}
    seen = {s}
    todo = deque([s])
    while todo:
        u = todo.popleft()
        for v in adj[u]:
            if v in gone or v in seen or tuple(sorted((u, v))) in cut:
                continue
            seen.add(v)
            todo.append(v)
    return seen


def brute_vertex_separator(adj, s, t):
    others = [v for v in range(len(adj)) if v not in (s, t)]
    for k in range(len(others) + 1):
        for combo in combinations(others, k):
            if t not in reachable(adj, s, removed_vertices=combo):
                return k


def brute_edge_separator(adj, s, t):
    nv = len(adj)
    others = [v for v in range(nv) if v not in (s, t)]
    best = None
    for k in range(len(others) + 1):
        for combo in combinations(others, k):
            side = {s, *combo}
            bnd = sum(1 for u in side for v in adj[u] if v not in side)
            best = bnd if best is None else min(best, bnd)
    return best


@st.composite
def connected_graphs(draw, max_vertices=9):
    nv = draw(st.integers(3, max_vertices))
    # random spanning tree plus extra edges
    edges = set()
    for v in range(1, nv):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = [(u, v) for u in range(nv) for v in range(u + 1, nv)]
    edges |= set(draw(st.lists(st.sampled_from(pairs), max_size=2 * nv)))
    adj = [[] for _ in range(nv)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(tuple(tuple(sorted(a)) for a in adj))


# --- classical connectivity --------------------------------------------------


def test_kappa_aq3():
    res = vertex_connectivity(build(3))
    assert res.value == 4
    assert len(res.certificate) == 4
    assert validate_cut(build(3), res.certificate, "vertex").h_extra_valid(0)


@pytest.mark.parametrize("n", range(4, 9))
def test_kappa_regular(n):
    assert vertex_connectivity(build(n)).value == 2 * n - 1


def test_complete_graph_convention():
    res = vertex_connectivity(build(2))
    assert (res.value, res.complete_graph, res.certificate) == (3, True, None)
    assert vertex_connectivity(build(1)).value == 1
    assert edge_connectivity(build(2)).value == 3


@pytest.mark.parametrize("n", range(2, 9))
def test_lambda(n):
    res = edge_connectivity(build(n))
    assert res.value == 2 * n - 1
    cert = validate_cut(build(n), res.certificate, "edge")
    assert cert.disconnected and cert.size == res.value


def test_disconnected_input():
    g = Graph(((1,), (0,), (3,), (2,)))
    assert vertex_connectivity(g).value == 0
    assert edge_connectivity(g).value == 0


def test_unmaterialized_rejected():
    from augcube.core import AugCube

    with pytest.raises(ArgumentError):
        vertex_connectivity(AugCube(4))


# --- local cuts ---------------------------------------------------------------


def test_menger_local_against_brute_force_aq3():
    g = build(3)
    values = set()
    for s in range(8):
        for t in range(8):
            if s == t:
                continue
            e = menger_local(g, s, t, "edge")
            assert e.value == 5 == brute_edge_separator(g.adjacency, s, t)
            if t in g.adjacency[s]:
                continue
            v = menger_local(g, s, t, "vertex")
            assert v.value == brute_vertex_separator(g.adjacency, s, t)
            values.add(v.value)
    assert min(values) == 4


def test_menger_local_aq4_at_least_seven():
    g = build(4)
    for t in range(1, 16):
        if t not in g.adjacency[0]:
            assert menger_local(g, 0, t, "vertex").value >= 7


def test_menger_duality_and_recheck():
    g = build(5)
    for s, t in [(0, 5), (3, 28), (7, 24), (0, 31)]:
        kinds = ["edge"] if t in g.adjacency[s] else ["edge", "vertex"]
        for kind in kinds:
            res = menger_local(g, s, t, kind)
            assert len(res.certificate) == res.value
            if kind == "vertex":
                assert t not in reachable(g.adjacency, s, removed_vertices=res.certificate)
            else:
                assert t not in reachable(g.adjacency, s, removed_edges=res.certificate)


def test_menger_argument_errors():
    g = build(3)
    with pytest.raises(ArgumentError):
        menger_local(g, 0, 1, "vertex")
    with pytest.raises(ArgumentError):
        menger_local(g, 2, 2, "edge")


@settings(max_examples=40)
@given(connected_graphs())
def test_flow_matches_exhaustive_on_random_graphs(g):
    lam = edge_connectivity(g).value
    assert lam == extra_conn_exhaustive(g, 0, "edge").value
    kappa = vertex_connectivity(g)
    if not kappa.complete_graph:
        assert kappa.value == extra_conn_exhaustive(g, 0, "vertex").value
    assert kappa.value <= lam <= min(len(a) for a in g.adjacency)


# --- h-extra, exhaustive ----------------------------------------------------


@pytest.mark.parametrize(
    "n, h, kind, expected",
    [
        (4, 2, "edge", 15),
        (4, 1, "edge", 12),
        (4, 0, "edge", 7),
        (4, 0, "vertex", 7),
        (3, 2, "vertex", None),
        (3, 0, "vertex", 4),
        (3, 1, "edge", 8),
        (2, 1, "edge", 4),
    ],
)
def test_exhaustive_values(n, h, kind, expected):
    res = extra_conn_exhaustive(build(n), h, kind)
    assert res.value == expected
    if expected is not None:
        assert len(res.certificate) == expected
        assert validate_cut(build(n), res.certificate, kind).h_extra_valid(h)
    else:
        assert res.certificate is None


def test_exhaustive_vertex_certificate_is_lexicographically_first():
    g = build(3)
    res = extra_conn_exhaustive(g, 0, "vertex")
    first = next(
        c
        for k in range(8)
        for c in combinations(range(8), k)
        if validate_cut(g, c, "vertex").h_extra_valid(0)
    )
    assert res.certificate == first


def test_exhaustive_capacity():
    with pytest.raises(CapacityError):
        extra_conn_exhaustive(build(5), 0, "edge")
    with pytest.raises(ArgumentError):
        extra_conn_exhaustive(build(3), -1, "edge")


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("kind", ["vertex", "edge"])
def test_monotone_in_h(n, kind):
    g = build(n)
    vals = [extra_conn_exhaustive(g, h, kind).value for h in (0, 1, 2)]
    present = [v for v in vals if v is not None]
    assert present == sorted(present)


def test_kappa_h_flow_vs_exhaustive():
    for n in (3, 4):
        assert vertex_connectivity(build(n)).value == extra_conn_exhaustive(build(n), 0, "vertex").value


# --- h-extra, fragment search -------------------------------------------------


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("h", [0, 1, 2])
def test_fragment_equals_exhaustive(n, h):
    g = build(n)
    frag = extra_conn_fragment(g, h)
    assert frag.exact
    assert frag.value == extra_conn_exhaustive(g, h, "edge").value
    assert validate_cut(g, frag.certificate, "edge").h_extra_valid(h)


def test_fragment_aq5_lambda2():
    res = extra_conn_fragment(build(5), 2)
    assert res.value == 21 and res.exact


def test_fragment_on_plain_graph_uses_all_roots():
    g = import_graph(export_graph(build(4)))
    for h in (0, 1, 2):
        assert extra_conn_fragment(g, h).value == extra_conn_fragment(build(4), h).value


@settings(max_examples=40)
@given(connected_graphs(max_vertices=10), st.integers(0, 2))
def test_fragment_matches_exhaustive_on_random_graphs(g, h):
    frag = extra_conn_fragment(g, h)
    assert frag.exact
    assert frag.value == extra_conn_exhaustive(g, h, "edge").value


def test_fragment_timeout_keeps_incumbent():
    res = extra_conn_fragment(build(8), 2, timeout=0.5)
    assert not res.exact
    assert res.value <= 39
    assert validate_cut(build(8), res.certificate, "edge").h_extra_valid(2)


def test_fragment_small_cap_is_not_exact():
    res = extra_conn_fragment(build(4), 2, size_cap=3)
    assert res.value == 15 and not res.exact


def test_fragment_edge_kind_only():
    with pytest.raises(ArgumentError):
        extra_conn_fragment(build(3), 1, kind="vertex")


# --- independent oracle -------------------------------------------------------

try:
    import networkx as nx
except ImportError:  # test extra not installed
    nx = None

needs_nx = pytest.mark.skipif(nx is None, reason="networkx not installed")


def to_nx(g):
    out = nx.Graph()
    out.add_nodes_from(range(g.num_vertices))
    out.add_edges_from(g.edges())
    return out


@needs_nx
@pytest.mark.parametrize("n", range(3, 7))
def test_against_networkx(n):
    g = build(n)
    ng = to_nx(g)
    assert vertex_connectivity(g).value == nx.node_connectivity(ng)
    assert edge_connectivity(g).value == nx.edge_connectivity(ng)
    for t in (3, 6, (1 << n) - 2):
        if t not in g.adjacency[0]:
            assert menger_local(g, 0, t, "vertex").value == nx.node_connectivity(ng, 0, t)
        assert menger_local(g, 0, t, "edge").value == nx.edge_connectivity(ng, 0, t)


@needs_nx
@settings(max_examples=40)
@given(connected_graphs(max_vertices=14))
def test_random_graphs_against_networkx(g):
    ng = to_nx(g)
    assert edge_connectivity(g).value == nx.edge_connectivity(ng)
    kappa = vertex_connectivity(g)
    if not kappa.complete_graph:
        assert kappa.value == nx.node_connectivity(ng)
