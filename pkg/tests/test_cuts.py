import pytest
from hypothesis import given
from hypothesis import strategies as st

from augcube.core import EdgeKind, build, classify_edge, comp_neighbor, hyper_neighbor
from augcube.cuts import (
    kappa2_candidate_cut,
    lambda2_candidate_cut,
    super_cut_candidates,
    super_edge_cut,
    super_vertex_cut,
    validate_cut,
)
from augcube.errors import ArgumentError, UnsupportedDimension


def test_kappa2_sizes():
    assert len(kappa2_candidate_cut(9)[1]) == 37
    assert len(kappa2_candidate_cut(5)[1]) == 13


@pytest.mark.parametrize("n", range(5, 13))
def test_kappa2_size_formula(n):
    for i in range(2, n - 2):
        assert len(kappa2_candidate_cut(n, 0, i)[1]) == 6 * n - 17


def test_kappa2_independent_of_base():
    assert {len(kappa2_candidate_cut(6, x, i)[1]) for x in range(64) for i in (2, 3)} == {19}


def test_kappa2_argument_ranges():
    with pytest.raises(UnsupportedDimension):
        kappa2_candidate_cut(4)
    with pytest.raises(ArgumentError):
        kappa2_candidate_cut(9, 0, 7)
    with pytest.raises(ArgumentError):
        kappa2_candidate_cut(9, 0, 1)


def test_kappa2_path_shape():
    p, s = kappa2_candidate_cut(9, 5, 3)
    assert p.vertices == (comp_neighbor(5, 3, 9), 5, comp_neighbor(5, 5, 9))
    assert not s & set(p.vertices)


@pytest.mark.parametrize("n", [9, 10, 11])
def test_kappa2_certifies(n):
    g = build(n)
    idx = range(2, n - 2) if n == 9 else [2]
    for i in idx:
        p, s = kappa2_candidate_cut(n, 0, i)
        cert = validate_cut(g, s, "vertex", 2)
        assert cert.disconnected
        assert 3 in cert.component_sizes
        assert cert.min_component >= 3
        assert cert.h_extra_valid(2)
        assert sum(cert.component_sizes) + cert.size == 1 << n


def test_kappa2_base_sweep_n9():
    g = build(9)
    for x in range(0, 512, 37):
        _, s = kappa2_candidate_cut(9, x, 2)
        assert validate_cut(g, s, "vertex").h_extra_valid(2)


def test_lambda2_triangle():
    tri, f = lambda2_candidate_cut(4, 0)
    assert set(tri) == {0b0000, 0b0001, 0b0011}
    assert len(f) == 15
    x, x1, xb2 = tri
    assert x1 == hyper_neighbor(x, 1, 4) and xb2 == comp_neighbor(x, 2, 4)
    assert classify_edge(x1, xb2, 4) == EdgeKind.hypercube(2)
    assert classify_edge(x, x1, 4) is not None and classify_edge(x, xb2, 4) is not None
    assert len(lambda2_candidate_cut(9)[1]) == 45
    with pytest.raises(UnsupportedDimension):
        lambda2_candidate_cut(3)


@pytest.mark.parametrize("n", range(4, 12))
def test_lambda2_certifies(n):
    g = build(n)
    _, f = lambda2_candidate_cut(n)
    cert = validate_cut(g, f, "edge", 2)
    assert cert.size == 6 * n - 9
    assert cert.component_sizes == (3, (1 << n) - 3)
    assert cert.h_extra_valid(2)


def test_super_cuts():
    assert len(super_vertex_cut(6, 0, EdgeKind.complement(3))) == 16
    for kind in (EdgeKind.hypercube(1), EdgeKind.hypercube(4), EdgeKind.complement(2), EdgeKind.complement(4)):
        assert len(super_edge_cut(4, 0, kind)) == 12
    with pytest.raises(ArgumentError):
        super_vertex_cut(6, 0, EdgeKind.hypercube(2))
    with pytest.raises(ArgumentError):
        super_vertex_cut(6, 0, EdgeKind.complement(6))
    vs, es = super_cut_candidates(7, 3, EdgeKind.complement(4))
    assert (len(vs), len(es)) == (20, 24)


def test_hypercube_edge_neighbourhood_is_larger():
    from augcube.neighborhood import neighborhood_of_set

    n = 6
    hyper = len(neighborhood_of_set({0, hyper_neighbor(0, 2, n)}, n))
    comp = len(neighborhood_of_set({0, comp_neighbor(0, 3, n)}, n))
    assert (hyper, comp) == (4 * n - 6, 4 * n - 8)


@pytest.mark.parametrize("n", range(6, 10))
def test_super_vertex_cut_certifies(n):
    g = build(n)
    for i in range(2, n):
        cert = validate_cut(g, super_vertex_cut(n, 0, EdgeKind.complement(i)), "vertex", 1)
        assert cert.size == 4 * n - 8 and cert.h_extra_valid(1)


@pytest.mark.parametrize("n", range(2, 10))
def test_super_edge_cut_certifies(n):
    g = build(n)
    cert = validate_cut(g, super_edge_cut(n, 0, EdgeKind.hypercube(1)), "edge", 1)
    assert cert.size == 4 * n - 4 and cert.h_extra_valid(1)


def test_validate_cut_basics():
    g = build(4)
    cert = validate_cut(g, [], "vertex", 0)
    assert not cert.disconnected and cert.component_sizes == (16,)
    with pytest.raises(ArgumentError):
        validate_cut(g, [16], "vertex")
    with pytest.raises(ArgumentError):
        validate_cut(g, [(0, 5)], "edge")
    with pytest.raises(ArgumentError):
        validate_cut(g, [], "face")


@given(st.integers(2, 7).flatmap(lambda n: st.tuples(st.just(n), st.sets(st.integers(0, (1 << n) - 1)))))
def test_vertex_certificate_conservation(args):
    n, members = args
    cert = validate_cut(build(n), members, "vertex")
    assert sum(cert.component_sizes) + cert.size == 1 << n


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.just(n), st.data())))
def test_edge_certificate_conservation(args):
    n, data = args
    g = build(n)
    edges = list(g.edges())
    members = data.draw(st.lists(st.sampled_from(edges), unique=True))
    cert = validate_cut(g, members, "edge")
    assert sum(cert.component_sizes) == 1 << n
    assert cert.h_extra_valid(0) == cert.disconnected
