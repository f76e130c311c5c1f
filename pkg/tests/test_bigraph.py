from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stmatch.bigraph import (
    LEFT,
    RIGHT,
    GraphError,
    VertexSet,
    as_rational,
    build_graph,
    complete_bipartite,
    components,
    deficiency,
    induced_subgraph,
    is_forest,
    is_tree,
    neighborhood,
    parse_rational,
    render_rational,
)

from conftest import alphas, graphs, path_graph


def test_build_star():
    G = build_graph(1, 2, [(0, 0), (0, 1)])
    assert G.u_count == 1 and G.v_count == 2
    assert G.adj_u == ((0, 1),)
    assert G.adj_v == ((0,), (0,))


def test_build_k23_matches_complete_bipartite():
    pairs = [(u, v) for u in range(2) for v in range(3)]
    assert build_graph(2, 3, reversed(pairs)) == complete_bipartite(2, 3)


def test_duplicate_edge_rejected():
    with pytest.raises(GraphError, match="duplicate"):
        build_graph(1, 1, [(0, 0), (0, 0)])


@pytest.mark.parametrize("edge", [(1, 0), (0, 1), (-1, 0)])
def test_out_of_range_rejected(edge):
    with pytest.raises(GraphError):
        build_graph(1, 1, [edge])


@given(graphs())
def test_adjacency_consistent(G):
    assert sum(len(a) for a in G.adj_u) == G.edge_count == sum(len(a) for a in G.adj_v)
    for u, v in G.edges:
        assert v in G.adj_u[u] and u in G.adj_v[v]
    for u in range(G.u_count):
        assert list(G.adj_u[u]) == sorted(G.adj_u[u])


def test_neighborhood_examples(k23):
    assert neighborhood(k23, [0, 1]).members == (0, 1, 2)
    assert neighborhood(k23, []).members == ()
    chain = build_graph(2, 3, [(0, 0), (0, 1), (1, 1), (1, 2)])
    assert neighborhood(chain, [0]) == VertexSet.of(RIGHT, [0, 1])
    assert neighborhood(chain, [1], LEFT).side == RIGHT
    assert neighborhood(chain, [1], RIGHT) == VertexSet.of(LEFT, [0, 1])


@given(graphs(), st.data())
def test_neighborhood_monotone(G, data):
    T = data.draw(st.sets(st.integers(0, G.u_count - 1)))
    S = data.draw(st.sets(st.sampled_from(sorted(T)))) if T else set()
    assert neighborhood(G, S).as_set() <= neighborhood(G, T).as_set()


def test_deficiency_examples(k23):
    assert deficiency(k23, [0, 1], Fraction(5, 3)) == Fraction(-1, 3)
    assert deficiency(k23, [], Fraction(7, 2)) == 0
    assert deficiency(complete_bipartite(1, 3), [0], 3) == 0


def test_deficiency_rejects_float(k23):
    with pytest.raises(TypeError):
        deficiency(k23, [0], 1.5)


def test_induced_subgraph_examples(k23):
    same = induced_subgraph(k23, range(2), range(3))
    assert same.graph == k23
    one = induced_subgraph(k23, [0], range(3))
    assert one.graph == complete_bipartite(1, 3)
    # path v0-u0-v1-u1; dropping v1 leaves two disjoint edges
    P = path_graph(3)
    split = induced_subgraph(P, [0, 1], [0])
    assert split.graph.edge_count == 1
    P4 = build_graph(2, 3, [(0, 0), (0, 1), (1, 1), (1, 2)])
    sub = induced_subgraph(P4, [0, 1], [0, 2])
    assert sub.graph.edges == ((0, 0), (1, 1))
    assert sub.v_old == (0, 2) and sub.v_new() == {0: 0, 2: 1}


@given(graphs(), st.data())
def test_induced_subgraph_keeps_exactly_inner_edges(G, data):
    A = data.draw(st.sets(st.integers(0, G.u_count - 1)))
    B = data.draw(st.sets(st.integers(0, G.v_count - 1)))
    sub = induced_subgraph(G, A, B)
    mapped = {(sub.u_old[u], sub.v_old[v]) for u, v in sub.graph.edges}
    assert mapped == {(u, v) for u, v in G.edges if u in A and v in B}


def test_components_examples(k23):
    two = build_graph(2, 2, [(0, 0), (1, 1)])
    assert len(components(two)) == 2
    assert components(k23) == [((0, 1), (0, 1, 2))]
    lonely = build_graph(1, 2, [(0, 0)])
    assert ((), (1,)) in components(lonely)


@given(graphs())
def test_components_partition_vertices(G):
    comps = components(G)
    assert sorted(u for ls, _ in comps for u in ls) == list(range(G.u_count))
    assert sorted(v for _, rs in comps for v in rs) == list(range(G.v_count))


def test_tree_and_forest():
    assert is_tree(path_graph(3))
    assert not is_forest(complete_bipartite(2, 2))
    two = build_graph(2, 2, [(0, 0), (1, 1)])
    assert is_forest(two) and not is_tree(two)


def test_mirror_swaps_sides(k23):
    M = k23.mirror()
    assert (M.u_count, M.v_count) == (3, 2)
    assert M.mirror() == k23


def test_remove_edge_returns_new_graph(k23):
    H = k23.remove_edge(0, 0)
    assert H.edge_count == 5 and k23.edge_count == 6
    with pytest.raises(GraphError):
        H.remove_edge(0, 0)


@given(alphas)
def test_rational_round_trip(x):
    assert parse_rational(render_rational(x)) == x


def test_rational_parsing():
    assert parse_rational("5/3") == Fraction(5, 3)
    assert render_rational(Fraction(4, 2)) == "2"
    with pytest.raises(ValueError):
        parse_rational("1.5")
    with pytest.raises(TypeError):
        as_rational(True)
