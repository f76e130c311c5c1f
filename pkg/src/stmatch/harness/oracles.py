"""Brute-force reference implementations used to cross-check the fast code.

Nothing here shares logic with the flow or search modules: subsets are
enumerated directly and coverings are searched edge by edge.
"""
from __future__ import annotations

from fractions import Fraction

from ..bigraph import BipartiteGraph, as_rational


def _scan(G: BipartiteGraph, alpha, keep):
    """Minimum of |Γ(A)| - alpha|A| over the left subsets A (as bitmasks) accepted by ``keep``.

    ``keep(A, gamma)`` sees the subset and its neighbourhood, both as bitmasks.
    Returns None if no subset is accepted.
    """
    alpha = as_rational(alpha)
    p, q = alpha.numerator, alpha.denominator
    n = G.u_count
    masks = [sum(1 << v for v in G.adj_u[u]) for u in range(n)]
    best = None
    for A in range(1 << n):
        gamma = 0
        size = 0
        for u in range(n):
            if A >> u & 1:
                gamma |= masks[u]
                size += 1
        if not keep(A, gamma):
            continue
        val = q * bin(gamma).count("1") - p * size
        if best is None or val < best:
            best = val
    return None if best is None else Fraction(best, q)


def f_value_bruteforce(G: BipartiteGraph, u: int, v: int, alpha) -> Fraction:
    """Minimum of |Γ(A)| - alpha|A| over A containing u whose only neighbour of v is u."""
    others = sum(1 << w for w in G.adj_v[v] if w != u)
    return _scan(G, alpha, lambda A, gamma: A >> u & 1 and not A & others)


def g_value_bruteforce(G: BipartiteGraph, u: int, v: int, alpha) -> Fraction:
    """Minimum of |Γ(A)| - alpha|A| over A avoiding u with v in Γ(A); 1 if there is no such A."""
    best = _scan(G, alpha, lambda A, gamma: not A >> u & 1 and gamma >> v & 1)
    return Fraction(1) if best is None else best


def min_deficiency_bruteforce(G: BipartiteGraph, alpha, forced=(), excluded=(), nonempty=True) -> Fraction | None:
    f_mask = sum(1 << u for u in set(forced))
    x_mask = sum(1 << u for u in set(excluded))
    return _scan(
        G, alpha,
        lambda A, gamma: (A or not nonempty) and A & f_mask == f_mask and not A & x_mask,
    )


def k_star_covering_exists_bruteforce(G: BipartiteGraph, k: int) -> list[tuple[int, int]] | None:
    """Exhaustive search for a k-star covering; returns one or None.

    Only inclusion-minimal coverings are searched.  In such a covering every
    edge has an endpoint covered by that edge alone, so the search repeatedly
    takes the first uncovered vertex and tries each edge that could cover it
    while keeping every component a star with at most k edges.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    nu, nv = G.u_count, G.v_count
    # vertices: left u -> u, right v -> nu + v
    nbrs = [[nu + v for v in G.adj_u[u]] for u in range(nu)] + [list(G.adj_v[v]) for v in range(nv)]
    if any(not xs for xs in nbrs):
        return None
    chosen: list[list[int]] = [[] for _ in range(nu + nv)]

    def can_join(x: int, y: int) -> bool:
        # x is uncovered; y becomes a star centre or stays a lone edge's end
        if not chosen[y]:
            return True
        if len(chosen[y]) == 1:
            other = chosen[y][0]
            if len(chosen[other]) >= 2:
                return False  # y is a leaf of another centre
        return len(chosen[y]) + 1 <= k

    def search() -> bool:
        x = next((i for i in range(nu + nv) if not chosen[i]), None)
        if x is None:
            return True
        for y in nbrs[x]:
            if not can_join(x, y):
                continue
            chosen[x].append(y)
            chosen[y].append(x)
            if search():
                return True
            chosen[x].pop()
            chosen[y].pop()
        return False

    if not search():
        return None
    return sorted({(x, y - nu) for x in range(nu) for y in chosen[x]})
