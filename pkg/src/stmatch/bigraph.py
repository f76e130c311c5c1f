"""Bipartite graphs with a left part U and a right part V.

Vertices are dense 0-based integers per side.  Graphs are immutable; any
operation that removes edges or vertices returns a new graph (plus index
maps where vertices are renumbered).

All quantities that depend on a ratio ``alpha`` are exact
:class:`fractions.Fraction` values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

Rational = Fraction

LEFT = "left"
RIGHT = "right"


class GraphError(ValueError):
    """Raised for malformed graph input (bad index, duplicate edge)."""


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions or ``"p/q"`` strings to an exact Fraction.

    Floats are rejected; they would silently lose exactness.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    if "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


def render_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class VertexSet:
    """A sorted set of vertex indices on one side of the graph."""

    side: str
    members: tuple[int, ...]

    @classmethod
    def of(cls, side: str, members: Iterable[int]) -> "VertexSet":
        if side not in (LEFT, RIGHT):
            raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}")
        return cls(side, tuple(sorted(set(members))))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, x) -> bool:
        return x in self.members

    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)


@dataclass(frozen=True, eq=False)
class BipartiteGraph:
    u_count: int
    v_count: int
    edges: tuple[tuple[int, int], ...]
    adj_u: tuple[tuple[int, ...], ...]
    adj_v: tuple[tuple[int, ...], ...]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return (self.u_count, self.v_count, self.edges) == (
            other.u_count,
            other.v_count,
            other.edges,
        )

    def __hash__(self) -> int:
        return hash((self.u_count, self.v_count, self.edges))

    def __repr__(self) -> str:
        return f"BipartiteGraph(u={self.u_count}, v={self.v_count}, edges={list(self.edges)})"

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree_u(self, u: int) -> int:
        return len(self.adj_u[u])

    def degree_v(self, v: int) -> int:
        return len(self.adj_v[v])

    def max_left_degree(self) -> int:
        return max((len(a) for a in self.adj_u), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.u_count and v in self.adj_u[u]

    def left_masks(self) -> tuple[int, ...]:
        """Neighbourhood of each left vertex as a bitmask over V."""
        out = []
        for nbrs in self.adj_u:
            m = 0
            for v in nbrs:
                m |= 1 << v
            out.append(m)
        return tuple(out)

    def mirror(self) -> "BipartiteGraph":
        """Swap the roles of U and V."""
        return build_graph(self.v_count, self.u_count, [(v, u) for u, v in self.edges])

    def remove_edges(self, removed: Iterable[tuple[int, int]]) -> "BipartiteGraph":
        gone = set(removed)
        missing = gone.difference(self.edges)
        if missing:
            raise GraphError(f"not edges of the graph: {sorted(missing)}")
        return build_graph(self.u_count, self.v_count, [e for e in self.edges if e not in gone])

    def remove_edge(self, u: int, v: int) -> "BipartiteGraph":
        return self.remove_edges([(u, v)])


def build_graph(u_count: int, v_count: int, edge_list: Iterable) -> BipartiteGraph:
    """Validate and normalise an edge list into a :class:`BipartiteGraph`."""
    if u_count < 0 or v_count < 0:
        raise GraphError("part sizes must be nonnegative")
    seen = set()
    for e in edge_list:
        u, v = e
        u, v = int(u), int(v)
        if not (0 <= u < u_count and 0 <= v < v_count):
            raise GraphError(f"edge ({u}, {v}) out of range for parts {u_count}x{v_count}")
        if (u, v) in seen:
            raise GraphError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
    edges = tuple(sorted(seen))
    adj_u = [[] for _ in range(u_count)]
    adj_v = [[] for _ in range(v_count)]
    for u, v in edges:
        adj_u[u].append(v)
        adj_v[v].append(u)
    return BipartiteGraph(
        u_count,
        v_count,
        edges,
        tuple(tuple(a) for a in adj_u),
        tuple(tuple(sorted(a)) for a in adj_v),
    )


def complete_bipartite(m: int, n: int) -> BipartiteGraph:
    return build_graph(m, n, [(u, v) for u in range(m) for v in range(n)])


def _check_members(G: BipartiteGraph, S: Iterable[int], side: str) -> list[int]:
    bound = G.u_count if side == LEFT else G.v_count
    members = list(S)
    for x in members:
        if not 0 <= x < bound:
            raise GraphError(f"{side} vertex {x} out of range")
    return members


def neighborhood(G: BipartiteGraph, S: Iterable[int], side: str = LEFT) -> VertexSet:
    """Γ(S).  ``S`` is on ``side``; the result lives on the opposite side."""
    adj = G.adj_u if side == LEFT else G.adj_v
    out: set[int] = set()
    for x in _check_members(G, S, side):
        out.update(adj[x])
    return VertexSet.of(RIGHT if side == LEFT else LEFT, out)


def deficiency(G: BipartiteGraph, S: Iterable[int], alpha) -> Fraction:
    """|Γ(S)| - alpha·|S| for a set ``S`` of left vertices."""
    members = set(_check_members(G, S, LEFT))
    return len(neighborhood(G, members)) - as_rational(alpha) * len(members)


class Subgraph(NamedTuple):
    graph: BipartiteGraph
    u_old: tuple[int, ...]  # new left index -> old left index
    v_old: tuple[int, ...]  # new right index -> old right index

    def u_new(self) -> dict[int, int]:
        return {old: new for new, old in enumerate(self.u_old)}

    def v_new(self) -> dict[int, int]:
        return {old: new for new, old in enumerate(self.v_old)}


def induced_subgraph(G: BipartiteGraph, A: Iterable[int], B: Iterable[int]) -> Subgraph:
    """G[A ∪ B], renumbered densely in ascending order of old index."""
    u_old = tuple(sorted(set(_check_members(G, A, LEFT))))
    v_old = tuple(sorted(set(_check_members(G, B, RIGHT))))
    u_new = {old: i for i, old in enumerate(u_old)}
    v_new = {old: i for i, old in enumerate(v_old)}
    edges = [(u_new[u], v_new[v]) for u, v in G.edges if u in u_new and v in v_new]
    return Subgraph(build_graph(len(u_old), len(v_old), edges), u_old, v_old)


def components(G: BipartiteGraph) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Connected components as (left vertices, right vertices) pairs.

    Ordered by smallest left vertex, then components with no left vertex by
    their right vertex.  Isolated vertices form singleton components.
    """
    seen_u = [False] * G.u_count
    seen_v = [False] * G.v_count
    out = []

    def grow(stack_u, stack_v):
        lefts, rights = [], []
        while stack_u or stack_v:
            if stack_u:
                u = stack_u.pop()
                lefts.append(u)
                for v in G.adj_u[u]:
                    if not seen_v[v]:
                        seen_v[v] = True
                        stack_v.append(v)
            else:
                v = stack_v.pop()
                rights.append(v)
                for u in G.adj_v[v]:
                    if not seen_u[u]:
                        seen_u[u] = True
                        stack_u.append(u)
        return tuple(sorted(lefts)), tuple(sorted(rights))

    for u in range(G.u_count):
        if not seen_u[u]:
            seen_u[u] = True
            out.append(grow([u], []))
    for v in range(G.v_count):
        if not seen_v[v]:
            seen_v[v] = True
            out.append(grow([], [v]))
    return out


def is_forest(G: BipartiteGraph) -> bool:
    return G.edge_count == G.u_count + G.v_count - len(components(G))


def is_tree(G: BipartiteGraph) -> bool:
    return len(components(G)) == 1 and is_forest(G)
