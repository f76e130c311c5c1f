from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import strategies as st

from stmatch.bigraph import build_graph, complete_bipartite, components


@st.composite
def graphs(draw, max_u=5, max_v=5, min_u=1, min_v=1):
    nu = draw(st.integers(min_u, max_u))
    nv = draw(st.integers(min_v, max_v))
    pairs = [(u, v) for u in range(nu) for v in range(nv)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(nu, nv, [e for e, keep in zip(pairs, chosen) if keep])


alphas = st.builds(Fraction, st.integers(0, 12), st.integers(1, 4))


def all_edge_subsets(G):
    for size in range(G.edge_count + 1):
        yield from combinations(G.edges, size)


def st_matching_exists_by_subsets(G, s, t):
    """Reference check straight from the definition, over every edge subset."""
    for F in combinations(G.edges, s * G.u_count) if G.u_count else [()]:
        deg = [0] * G.u_count
        for u, _ in F:
            deg[u] += 1
        if any(x != s for x in deg):
            continue
        H = build_graph(G.u_count, G.v_count, F)
        ok = True
        for lefts, rights in components(H):
            m = sum(H.degree_u(u) for u in lefts)
            if m != len(lefts) + len(rights) - 1 or m > t:
                ok = False
                break
        if ok:
            return True
    return False


def path_graph(n_edges):
    """A path alternating v0-u0-v1-u1-... with ``n_edges`` edges, starting at v0."""
    edges = []
    for i in range(n_edges):
        u = i // 2
        v = (i + 1) // 2
        edges.append((u, v))
    nu = max(u for u, _ in edges) + 1
    nv = max(v for _, v in edges) + 1
    return build_graph(nu, nv, edges)


@pytest.fixture
def k23():
    return complete_bipartite(2, 3)
