"""Extremal constructions showing the main threshold cannot be lowered.

Every gadget is described by its left vertices' neighbourhoods (hyperedges
over the right vertices):

* chain I_q: q hyperedges of size h, consecutive ones sharing one right
  vertex, with end vertices ``v`` and ``w``.  I_0 is a single vertex.
* star edge: one hyperedge {v, w, h-2 fresh vertices, anchor}, with an I_a
  chain hanging off the anchor.
* triangle edge: one hyperedge of size h+r on {v, w} plus b+r-2 anchors
  carrying I_{a+1} chains and h-b anchors carrying I_a chains.
* base graph H: a central hyperedge of size h+r on a spine; the first b+r
  spine vertices carry I_{a+1} chains (L_1, ...), the other h-b carry I_a
  chains (M_1, ...).  ``v_1`` is the spine vertex of L_1.
* augmenting gadget J_n: an odd cycle of 2n+1 junction vertices whose
  cycle edges are star and triangle edges alternating S_1, T_1, ..., T_n,
  S_{n+1}, so that S_{n+1} and S_1 meet at ``v_1``.
* tight family G_n: H with L_1 minus v_1 removed, glued to J_n at v_1.

Here k = a·h + b with b in 1..h and r = d - h.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .bigraph import BipartiteGraph, build_graph, induced_subgraph, render_rational


@dataclass(frozen=True)
class GadgetSpec:
    h: int
    k: int
    d: int
    n: int = 1
    q: int = 1

    def __post_init__(self):
        if self.h < 2:
            raise ValueError("constructions need h >= 2")
        if self.d <= self.h:
            raise ValueError("need d > h")
        if self.k < 1 or self.n < 1 or self.q < 1:
            raise ValueError("k, n, q must be positive")

    @property
    def r(self) -> int:
        return self.d - self.h

    @property
    def a(self) -> int:
        return (self.k - 1) // self.h

    @property
    def b(self) -> int:
        return self.k - self.a * self.h

    def as_dict(self) -> dict:
        return {"h": self.h, "k": self.k, "d": self.d, "n": self.n, "q": self.q,
                "r": self.r, "a": self.a, "b": self.b}


@dataclass(frozen=True)
class Gadget:
    graph: BipartiteGraph
    ports: dict[str, int]
    parts: dict[str, tuple[tuple[int, ...], tuple[int, ...]]] = field(default_factory=dict)
    spec: GadgetSpec | None = None

    @property
    def left_count(self) -> int:
        return self.graph.u_count

    @property
    def right_count(self) -> int:
        return self.graph.v_count

    def metadata(self) -> dict:
        meta = {"ports": dict(self.ports)}
        if self.spec is not None:
            meta["spec"] = self.spec.as_dict()
            meta["predicted_ratio"] = render_rational(
                tight_family_ratio(self.spec.h, self.spec.k, self.spec.d, self.spec.n)
            )
        return meta


class _Builder:
    """Accumulates hyperedges (left vertices) over fresh right vertices."""

    def __init__(self, h: int):
        self.h = h
        self.nv = 0
        self.hyperedges: list[list[int]] = []

    def fresh(self, count: int = 1) -> list[int]:
        out = list(range(self.nv, self.nv + count))
        self.nv += count
        return out

    def hyperedge(self, members: list[int]) -> int:
        if len(set(members)) != len(members):
            raise AssertionError("hyperedge repeats a vertex")
        self.hyperedges.append(list(members))
        return len(self.hyperedges) - 1

    def chain(self, start: int, q: int) -> tuple[int, list[int], list[int]]:
        """Grow I_q from ``start``; returns (far end, left vertices, new right vertices)."""
        lefts, rights = [], []
        x = start
        for _ in range(q):
            (y,) = self.fresh()
            extra = self.fresh(self.h - 2)
            rights += [y, *extra]
            lefts.append(self.hyperedge([x, *extra, y]))
            x = y
        return x, lefts, rights

    def star_edge(self, v: int, w: int, a: int) -> list[int]:
        extra = self.fresh(self.h - 2)
        (anchor,) = self.fresh()
        centre = self.hyperedge([v, w, *extra, anchor])
        _, lefts, _ = self.chain(anchor, a)
        return [centre, *lefts]

    def triangle_edge(self, v: int, w: int, r: int, a: int, b: int) -> list[int]:
        if b + r < 2:
            raise ValueError("triangle edge needs b + r >= 2")
        long_anchors = self.fresh(b + r - 2)
        short_anchors = self.fresh(self.h - b)
        centre = self.hyperedge([v, w, *long_anchors, *short_anchors])
        lefts = [centre]
        for x in long_anchors:
            lefts += self.chain(x, a + 1)[1]
        for x in short_anchors:
            lefts += self.chain(x, a)[1]
        return lefts

    def graph(self) -> BipartiteGraph:
        edges = [(u, v) for u, hyper in enumerate(self.hyperedges) for v in hyper]
        return build_graph(len(self.hyperedges), self.nv, edges)


def _check_hab(h: int, a: int = 0, b: int = 1) -> None:
    if h < 2:
        raise ValueError("constructions need h >= 2")
    if a < 0:
        raise ValueError("a must be nonnegative")
    if not 1 <= b <= h:
        raise ValueError("b must lie in 1..h")


def chain_gadget(q: int, h: int) -> Gadget:
    if q < 1:
        raise ValueError("q must be positive")
    _check_hab(h)
    B = _Builder(h)
    (v,) = B.fresh()
    w, _, _ = B.chain(v, q)
    return Gadget(B.graph(), {"v": v, "w": w})


def star_edge(h: int, a: int) -> Gadget:
    _check_hab(h, a)
    B = _Builder(h)
    v, w = B.fresh(2)
    B.star_edge(v, w, a)
    return Gadget(B.graph(), {"v": v, "w": w})


def triangle_edge(h: int, r: int, a: int, b: int) -> Gadget:
    _check_hab(h, a, b)
    if r < 1:
        raise ValueError("r must be positive")
    B = _Builder(h)
    v, w = B.fresh(2)
    B.triangle_edge(v, w, r, a, b)
    return Gadget(B.graph(), {"v": v, "w": w})


def _base_into(B: _Builder, r: int, a: int, b: int) -> tuple[int, dict]:
    h = B.h
    spine = B.fresh(h + r)
    parts = {}
    B.hyperedge(spine)
    for i, x in enumerate(spine[: b + r]):
        start_u, start_v = len(B.hyperedges), B.nv
        B.chain(x, a + 1)
        parts[f"L_{i + 1}"] = (tuple(range(start_u, len(B.hyperedges))), (x, *range(start_v, B.nv)))
    for j, x in enumerate(spine[b + r:]):
        start_u, start_v = len(B.hyperedges), B.nv
        B.chain(x, a)
        parts[f"M_{j + 1}"] = (tuple(range(start_u, len(B.hyperedges))), (x, *range(start_v, B.nv)))
    return spine[0], parts


def base_graph(h: int, r: int, a: int, b: int) -> Gadget:
    _check_hab(h, a, b)
    if r < 1:
        raise ValueError("r must be positive")
    B = _Builder(h)
    v1, parts = _base_into(B, r, a, b)
    return Gadget(B.graph(), {"v_1": v1}, parts)


def _augment_into(B: _Builder, v1: int, n: int, r: int, a: int, b: int) -> dict:
    junctions = [v1, *B.fresh(2 * n)]
    parts = {}
    m = len(junctions)
    for i in range(m):
        x, y = junctions[i], junctions[(i + 1) % m]
        start_v = B.nv
        if i % 2 == 0:
            name = f"S_{i // 2 + 1}"
            lefts = B.star_edge(x, y, a)
        else:
            name = f"T_{i // 2 + 1}"
            lefts = B.triangle_edge(x, y, r, a, b)
        parts[name] = (tuple(lefts), (x, y, *range(start_v, B.nv)))
    parts["junctions"] = ((), tuple(junctions))
    return parts


def augment_gadget(n: int, h: int, r: int, a: int, b: int) -> Gadget:
    if n < 1:
        raise ValueError("n must be positive")
    _check_hab(h, a, b)
    if r < 1:
        raise ValueError("r must be positive")
    B = _Builder(h)
    (v1,) = B.fresh()
    parts = _augment_into(B, v1, n, r, a, b)
    return Gadget(B.graph(), {"v_1": v1}, parts)


def glue(first: Gadget, second: Gadget, identify: dict[str, str]) -> Gadget:
    """Disjoint union of two gadgets with named right ports identified.

    ``identify`` maps port names of ``first`` to port names of ``second``;
    the merged vertex keeps the first gadget's index and name.
    """
    G1, G2 = first.graph, second.graph
    merged = {second.ports[p2]: first.ports[p1] for p1, p2 in identify.items()}
    v_map, nxt = {}, G1.v_count
    for v in range(G2.v_count):
        if v in merged:
            v_map[v] = merged[v]
        else:
            v_map[v] = nxt
            nxt += 1
    edges = list(G1.edges) + [(G1.u_count + u, v_map[v]) for u, v in G2.edges]
    graph = build_graph(G1.u_count + G2.u_count, nxt, edges)
    ports = dict(first.ports)
    for name, v in second.ports.items():
        if name not in identify.values():
            ports.setdefault(name, v_map[v])
    return Gadget(graph, ports)


def tight_family(h: int, k: int, d: int, n: int) -> Gadget:
    """G_n: max left degree <= d, no (h, hk)-matching, minimum ratio attained at U_n."""
    if k < 2:
        raise ValueError("tight family needs k >= 2")
    spec = GadgetSpec(h, k, d, n)
    r, a, b = spec.r, spec.a, spec.b
    H = base_graph(h, r, a, b)
    l1_lefts, l1_rights = H.parts["L_1"]
    v1 = H.ports["v_1"]
    keep_u = [u for u in range(H.graph.u_count) if u not in l1_lefts]
    keep_v = [v for v in range(H.graph.v_count) if v == v1 or v not in l1_rights]
    trimmed = induced_subgraph(H.graph, keep_u, keep_v)
    H_prime = Gadget(trimmed.graph, {"v_1": trimmed.v_new()[v1]})
    J = augment_gadget(n, h, r, a, b)
    G = glue(H_prime, J, {"v_1": "v_1"})
    return Gadget(G.graph, G.ports, {}, spec)


def tight_family_ratio(h: int, k: int, d: int, n: int) -> Fraction:
    """|V_n| / |U_n| for the tight family, in closed form.

    Equals h - 1 + (n+1)(r+1) / ((n+1)(a(h+r-1)+b+r) + a + 1); the term
    a(h+r-1)+b+r is k+1+(a+1)(r-1), the denominator of the threshold.
    """
    spec = GadgetSpec(h, k, d, n)
    r, a, b = spec.r, spec.a, spec.b
    left = 1 + a * (h + r) + b + r + n * (a * (h + r - 1) + b + r)
    return h - 1 + Fraction((n + 1) * (r + 1), left)


def tight_family_counts(h: int, k: int, d: int, n: int) -> tuple[int, int]:
    """Closed-form (|U_n|, |V_n|)."""
    spec = GadgetSpec(h, k, d, n)
    r, a, b = spec.r, spec.a, spec.b
    left = 1 + a * (h + r) + b + r + n * (a * (h + r - 1) + b + r)
    return left, (h - 1) * left + (n + 1) * (r + 1)

