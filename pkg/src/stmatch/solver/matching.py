"""(s,t)-matchings: exact backtracking search and an independent verifier."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from ..bigraph import BipartiteGraph, build_graph, components


class SearchBudgetExceeded(RuntimeError):
    """The node-expansion budget ran out before the search was decided."""

    def __init__(self, nodes: int):
        super().__init__(f"search budget of {nodes} node expansions exhausted")
        self.nodes = nodes


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: str | None = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.accepted


@dataclass(frozen=True)
class Component:
    lefts: tuple[int, ...]
    rights: tuple[int, ...]
    edge_count: int


@dataclass(frozen=True)
class ForestCover:
    """A chosen edge set together with the components it induces on (U, V, F)."""

    edges: tuple[tuple[int, int], ...]
    components: tuple[Component, ...]

    def __len__(self) -> int:
        return len(self.edges)


def forest_cover(G: BipartiteGraph, edges: Iterable[tuple[int, int]], *, include_isolated: bool = False) -> ForestCover:
    F = tuple(sorted(set(edges)))
    H = build_graph(G.u_count, G.v_count, F)
    comps = []
    for lefts, rights in components(H):
        if not include_isolated and len(lefts) + len(rights) == 1:
            continue
        m = sum(H.degree_u(u) for u in lefts)
        comps.append(Component(lefts, rights, m))
    return ForestCover(F, tuple(comps))


def _subgraph_of(G: BipartiteGraph, F) -> BipartiteGraph | Verdict:
    F = list(F)
    if len(set(F)) != len(F):
        return Verdict(False, "duplicate edge in F")
    for u, v in F:
        if not G.has_edge(u, v):
            return Verdict(False, f"({u}, {v}) is not an edge of G", (u, v))
    return build_graph(G.u_count, G.v_count, F)


def verify_st_matching(G: BipartiteGraph, s: int, t: int, F) -> Verdict:
    """Check degrees, acyclicity and component sizes of a candidate (s,t)-matching."""
    H = _subgraph_of(G, F)
    if isinstance(H, Verdict):
        return H
    for u in range(G.u_count):
        if H.degree_u(u) != s:
            return Verdict(False, f"left vertex {u} has {H.degree_u(u)} chosen edges, need {s}", u)
    for lefts, rights in components(H):
        m = sum(H.degree_u(u) for u in lefts)
        if m != len(lefts) + len(rights) - 1:
            return Verdict(False, "component contains a cycle", (lefts, rights))
        if m > t:
            return Verdict(False, f"component has {m} edges, limit {t}", (lefts, rights))
    return Verdict(True)


class _RollbackDSU:
    """Union-find without path compression, undone in LIFO order."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.edges = [0] * n
        self.history: list[tuple[int, int, int]] = []

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            x = p[x]
        return x

    def attach(self, a: int, b: int) -> int:
        """Union the roots ``a`` and ``b``; returns the new root."""
        if self.size[a] < self.size[b]:
            a, b = b, a
        self.history.append((b, a, self.edges[a]))
        self.parent[b] = a
        self.size[a] += self.size[b]
        self.edges[a] += self.edges[b]
        return a

    def add_edges(self, root: int, m: int) -> None:
        self.history.append((-1, root, self.edges[root]))
        self.edges[root] += m

    def mark(self) -> int:
        return len(self.history)

    def rollback(self, mark: int) -> None:
        while len(self.history) > mark:
            child, root, old_edges = self.history.pop()
            if child >= 0:
                self.parent[child] = child
                self.size[root] -= self.size[child]
            self.edges[root] = old_edges


def find_st_matching(G: BipartiteGraph, s: int, t: int, budget: int | None = 1_000_000) -> ForestCover | None:
    """Find an (s,t)-matching or prove that none exists.

    Left vertices are processed in descending degree order and each picks an
    s-subset of its neighbours (lexicographic order).  A union-find with
    per-component edge counts rejects choices that close a cycle or push a
    component past ``t`` edges; a look-ahead drops any branch where some
    unprocessed left vertex can no longer be completed.

    Returns ``None`` when the exhaustive search finds nothing and raises
    :class:`SearchBudgetExceeded` if more than ``budget`` nodes are expanded.
    """
    if not (1 <= s <= t):
        raise ValueError(f"need 1 <= s <= t, got s={s}, t={t}")
    nu = G.u_count
    if any(G.degree_u(u) < s for u in range(nu)):
        return None
    order = sorted(range(nu), key=lambda u: (-G.degree_u(u), u))
    dsu = _RollbackDSU(nu + G.v_count)
    chosen: list[tuple[int, ...]] = [()] * nu
    nodes = 0

    def completable(w: int) -> bool:
        sizes = {}
        for v in G.adj_u[w]:
            r = dsu.find(nu + v)
            sizes[r] = dsu.edges[r]
        if len(sizes) < s:
            return False
        return s + sum(sorted(sizes.values())[:s]) <= t

    def search(i: int) -> bool:
        nonlocal nodes
        if i == nu:
            return True
        u = order[i]
        for subset in combinations(G.adj_u[u], s):
            roots = [dsu.find(nu + v) for v in subset]
            if len(set(roots)) < s:
                continue
            if s + sum(dsu.edges[r] for r in roots) > t:
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                raise SearchBudgetExceeded(budget)
            mark = dsu.mark()
            root = u
            for r in roots:
                root = dsu.attach(dsu.find(root), r)
            dsu.add_edges(root, s)
            if all(completable(order[j]) for j in range(i + 1, nu)) and search(i + 1):
                chosen[u] = subset
                return True
            dsu.rollback(mark)
        return False

    if not search(0):
        return None
    return forest_cover(G, [(u, v) for u in range(nu) for v in chosen[u]])

