import pytest
from hypothesis import given
from hypothesis import strategies as st

from augcube.core import Graph, build
from augcube.errors import ParseError
from augcube.graphio import export_graph, import_graph


def test_edgelist_aq1():
    assert export_graph(build(1), "edgelist") == b"2 1\n0 1\n"
    assert export_graph(build(1), "dimacs") == b"p edge 2 1\ne 1 2\n"


def test_edgelist_aq3_line_count():
    lines = export_graph(build(3)).decode().splitlines()
    assert lines[0] == "8 20"
    assert len(lines) == 21
    pairs = [tuple(map(int, ln.split())) for ln in lines[1:]]
    assert pairs == sorted(pairs)
    assert all(u < v for u, v in pairs)


@pytest.mark.parametrize("fmt", ["edgelist", "dimacs"])
@pytest.mark.parametrize("n", [1, 3, 4, 6])
def test_round_trip(fmt, n):
    g = build(n)
    back = import_graph(export_graph(g, fmt), fmt)
    assert set(back.edges()) == set(g.edges())
    assert back.adjacency == g.adjacency
    assert export_graph(back, fmt) == export_graph(g, fmt)


@st.composite
def graphs(draw):
    nv = draw(st.integers(1, 12))
    pairs = [(u, v) for u in range(nv) for v in range(u + 1, nv)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    adj = [[] for _ in range(nv)]
    for u, v in chosen:
        adj[u].append(v)
        adj[v].append(u)
    return Graph(tuple(tuple(sorted(a)) for a in adj))


@given(graphs(), st.sampled_from(["edgelist", "dimacs"]))
def test_round_trip_arbitrary(g, fmt):
    assert import_graph(export_graph(g, fmt), fmt) == g


@pytest.mark.parametrize(
    "text, fmt, line",
    [
        ("2 1\n0 x\n", "edgelist", 2),
        ("2 1\n0 2\n", "edgelist", 2),
        ("2 1\n0 0\n", "edgelist", 2),
        ("3 2\n0 1\n1 0\n", "edgelist", 3),
        ("3\n", "edgelist", 1),
        ("p edge 2 1\nq 1 2\n", "dimacs", 2),
        ("p edge 2 1\ne 0 1\n", "dimacs", 2),
        ("e 1 2\n", "dimacs", 1),
        ("p graph 2 1\n", "dimacs", 1),
    ],
)
def test_parse_errors_carry_line(text, fmt, line):
    with pytest.raises(ParseError) as exc:
        import_graph(text, fmt)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_count_mismatch():
    with pytest.raises(ParseError, match="declares 2 edges"):
        import_graph("3 2\n0 1\n")


def test_dimacs_comments():
    g = import_graph("c made by hand\np edge 3 2\ne 1 2\nc mid\ne 2 3\n", "dimacs")
    assert list(g.edges()) == [(0, 1), (1, 2)]
