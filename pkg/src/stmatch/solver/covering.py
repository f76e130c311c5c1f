"""k-star coverings.

A k-star covering exists exactly when the double-sided 1/k-neighbourhood
condition holds.  The constructive side works by

1. peeling: delete every edge whose removal keeps the double-sided
   condition (one pass suffices, deletability can only be lost);
2. if an edge uv remains with both endpoints of degree >= 2, some set T on
   one side avoiding the neighbours of v (or of u) is tight, h(T, 1/k) = 0.
   G[T ∪ Γ(T)] is then covered by a Hall-type (1,k)-assignment in which
   every vertex of Γ(T) receives exactly k leaves, and the rest of the graph
   still satisfies the condition, so we recurse on it;
3. otherwise every edge touches a leaf and the graph is already a disjoint
   union of stars.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable

from ..bigraph import LEFT, RIGHT, BipartiteGraph, components, induced_subgraph, neighborhood
from ..conditions import SubsetConstraints, check_double_sided, min_deficiency
from ..flow import FlowNetwork
from .matching import ForestCover, Verdict, _subgraph_of, forest_cover


def verify_k_star_covering(G: BipartiteGraph, k: int, F) -> Verdict:
    """Check that F covers every vertex and splits into stars with at most k edges."""
    H = _subgraph_of(G, F)
    if isinstance(H, Verdict):
        return H
    for lefts, rights in components(H):
        if len(lefts) + len(rights) == 1:
            side, x = (LEFT, lefts[0]) if lefts else (RIGHT, rights[0])
            return Verdict(False, f"{side} vertex {x} is not covered", (side, x))
        m = sum(H.degree_u(u) for u in lefts)
        if m > k:
            return Verdict(False, f"star with {m} edges, limit {k}", (lefts, rights))
        # a star: some vertex is incident to every edge of the component
        centre = max(
            [H.degree_u(u) for u in lefts] + [H.degree_v(v) for v in rights]
        )
        if centre != m or m != len(lefts) + len(rights) - 1:
            return Verdict(False, "component is not a star", (lefts, rights))
    return Verdict(True)


def _peel(G: BipartiteGraph, alpha: Fraction, on_delete) -> BipartiteGraph:
    for e in G.edges:
        H = G.remove_edge(*e)
        if check_double_sided(H, alpha):
            G = H
            if on_delete is not None:
                on_delete(G)
    return G


def _saturating_assignment(H: BipartiteGraph, k: int) -> list[tuple[int, int]]:
    """Assign every left vertex of H to one neighbour, each right vertex taking at most k."""
    nu, nv = H.u_count, H.v_count
    net = FlowNetwork(2 + nu + nv)
    arcs = []
    for u in range(nu):
        net.add_arc(0, 2 + u, 1)
        for v in H.adj_u[u]:
            arcs.append((net.add_arc(2 + u, 2 + nu + v, 1), u, v))
    for v in range(nv):
        net.add_arc(2 + nu + v, 1, k)
    if net.max_flow(0, 1) != nu:
        raise AssertionError("tight set without a saturating (1,k)-assignment")
    return [(u, v) for a, u, v in arcs if net.flow_on(a)]


def _tight_split(G: BipartiteGraph, u: int, v: int, alpha: Fraction):
    """A tight set on either side for the non-peelable edge uv.

    Returns ``(lefts, rights, leaf_side)`` describing G[T ∪ Γ(T)], where
    ``leaf_side`` is the side of T.
    """
    rep = min_deficiency(G, alpha, SubsetConstraints.make(excluded=G.adj_v[v]))
    if not rep.family_empty and rep.minimum == 0:
        T = rep.witness.members
        return T, neighborhood(G, T).members, LEFT
    M = G.mirror()
    rep = min_deficiency(M, alpha, SubsetConstraints.make(excluded=G.adj_u[u]))
    if not rep.family_empty and rep.minimum == 0:
        T = rep.witness.members
        return neighborhood(M, T).members, T, RIGHT
    raise AssertionError(f"no tight set found for edge ({u}, {v})")


def _cover(G: BipartiteGraph, k: int, alpha: Fraction, on_delete) -> list[tuple[int, int]]:
    if G.u_count + G.v_count == 0:
        return []
    G = _peel(G, alpha, on_delete)
    for u, v in G.edges:
        if G.degree_u(u) >= 2 and G.degree_v(v) >= 2:
            break
    else:
        return list(G.edges)

    lefts, rights, leaf_side = _tight_split(G, u, v, alpha)
    tight = induced_subgraph(G, lefts, rights)
    if leaf_side == LEFT:
        local = _saturating_assignment(tight.graph, k)
    else:
        local = [(b, a) for a, b in _saturating_assignment(tight.graph.mirror(), k)]
    out = [(tight.u_old[a], tight.v_old[b]) for a, b in local]

    keep_u = sorted(set(range(G.u_count)) - set(lefts))
    keep_v = sorted(set(range(G.v_count)) - set(rights))
    rest = induced_subgraph(G, keep_u, keep_v)
    out += [(rest.u_old[a], rest.v_old[b]) for a, b in _cover(rest.graph, k, alpha, on_delete)]
    return out


def find_k_star_covering(
    G: BipartiteGraph,
    k: int,
    on_delete: Callable[[BipartiteGraph], None] | None = None,
) -> ForestCover | None:
    """Construct a k-star covering, or return None if the double-sided 1/k condition fails.

    ``on_delete`` is called with the current (sub)graph after each peeled
    edge; tests use it to watch the condition being preserved.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    alpha = Fraction(1, k)
    if not check_double_sided(G, alpha):
        return None
    F = _cover(G, k, alpha, on_delete)
    return forest_cover(G, F)

