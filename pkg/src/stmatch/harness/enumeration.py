"""Small bipartite graph streams for exhaustive campaigns."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from typing import Iterator

from ..bigraph import BipartiteGraph, build_graph, components
from ..conditions import ceil_div

EDGE_CAP = 48
DEDUP_MODES = ("none", "degree-profile", "symmetry")


@dataclass(frozen=True)
class EnumerationBounds:
    """Sizes to enumerate: u_min..u_max left and v_min..v_max right vertices,
    optionally with u + v <= total_max.  The edge cap applies to the largest
    size pair actually enumerated.

    ``dedup``:
      * ``"none"``: every labelled graph;
      * ``"degree-profile"``: first graph seen per (sorted left degrees,
        sorted right degrees);
      * ``"symmetry"``: left neighbourhoods in nondecreasing bitmask order and
        right degrees nonincreasing.  Every isomorphism class still appears
        at least once, usually several times.
    """

    u_max: int
    v_max: int
    d_max: int | None = None
    connected_only: bool = False
    dedup: str = "none"
    u_min: int = 1
    v_min: int = 1
    total_max: int | None = None
    cap: int = EDGE_CAP

    def __post_init__(self):
        if self.dedup not in DEDUP_MODES:
            raise ValueError(f"dedup must be one of {DEDUP_MODES}")
        worst = max((nu * nv for nu, nv in self.sizes()), default=0)
        if worst > self.cap:
            raise ValueError(f"bounds allow {worst} potential edges, above the cap of {self.cap}")

    def sizes(self) -> Iterator[tuple[int, int]]:
        for nu in range(self.u_min, self.u_max + 1):
            for nv in range(self.v_min, self.v_max + 1):
                if self.total_max is None or nu + nv <= self.total_max:
                    yield nu, nv


def _masks(nv: int, lo: int, hi: int) -> list[int]:
    out = []
    for size in range(lo, min(hi, nv) + 1):
        for combo in combinations(range(nv), size):
            out.append(sum(1 << v for v in combo))
    return sorted(out)


def graph_from_masks(masks, nv: int) -> BipartiteGraph:
    return build_graph(len(masks), nv, [(u, v) for u, m in enumerate(masks) for v in range(nv) if m >> v & 1])


def _right_degrees(masks, nv: int) -> list[int]:
    return [sum(m >> v & 1 for m in masks) for v in range(nv)]


def _nonincreasing(xs) -> bool:
    return all(xs[i] >= xs[i + 1] for i in range(len(xs) - 1))


def _connected(G: BipartiteGraph) -> bool:
    return len(components(G)) == 1


def enumerate_bipartite(bounds: EnumerationBounds) -> Iterator[BipartiteGraph]:
    """Deterministic stream of bipartite graphs within ``bounds``."""
    seen_profiles = set()
    for nu, nv in bounds.sizes():
        d = nv if bounds.d_max is None else min(bounds.d_max, nv)
        masks = _masks(nv, 0, d)
        if bounds.dedup == "symmetry":
            stream = combinations_with_replacement(masks, nu)
        else:
            stream = product(masks, repeat=nu)
        for combo in stream:
            if bounds.dedup == "symmetry" and not _nonincreasing(_right_degrees(combo, nv)):
                continue
            G = graph_from_masks(combo, nv)
            if bounds.connected_only and not _connected(G):
                continue
            if bounds.dedup == "degree-profile":
                key = (
                    nu,
                    nv,
                    tuple(sorted(len(a) for a in G.adj_u)),
                    tuple(sorted(len(a) for a in G.adj_v)),
                )
                if key in seen_profiles:
                    continue
                seen_profiles.add(key)
            yield G


def condition_candidates(u_max: int, v_max: int, d_max: int, alpha) -> Iterator[BipartiteGraph]:
    """Every graph (up to isomorphism) with |U| <= u_max, |V| <= v_max, left
    degrees <= d_max and no isolated right vertex that satisfies the
    alpha-neighbourhood condition.

    Left neighbourhoods are grown in nondecreasing bitmask order and a prefix
    is abandoned as soon as it violates the condition (the condition on a
    prefix only involves that prefix).  Right vertices are kept in
    nonincreasing degree order; trailing isolated ones are dropped.  The
    check here is a brute-force subset scan, independent of the flow code.
    """
    alpha = Fraction(alpha)
    p, q = alpha.numerator, alpha.denominator
    lo = max(1, ceil_div(p, q))
    masks = _masks(v_max, lo, d_max)
    popcount = [bin(m).count("1") for m in range(1 << max(u_max, v_max))]

    def extend(prefix: list[int], gammas: list[int], start: int):
        i = len(prefix)
        if prefix:
            degs = _right_degrees(prefix, v_max)
            if _nonincreasing(degs):
                nv = sum(1 for x in degs if x)
                if all(degs[:nv]):
                    yield graph_from_masks(prefix, nv)
        if i == u_max or p * (i + 1) > q * v_max:
            return
        for j in range(start, len(masks)):
            m = masks[j]
            new = [g | m for g in gammas]
            ok = True
            # subsets containing the new vertex: old subset S plus it
            for S, g in enumerate(new):
                if q * popcount[g] < p * (popcount[S] + 1):
                    ok = False
                    break
            if not ok:
                continue
            prefix.append(m)
            yield from extend(prefix, gammas + new, j)
            prefix.pop()

    yield from extend([], [0], 0)


def random_graph(rng: random.Random, u_max: int, v_max: int, u_min: int = 1, v_min: int = 1) -> BipartiteGraph:
    nu = rng.randint(u_min, u_max)
    nv = rng.randint(v_min, v_max)
    p = rng.uniform(0.2, 0.8)
    return build_graph(nu, nv, [(u, v) for u in range(nu) for v in range(nv) if rng.random() < p])


def random_tree(rng: random.Random, u_count: int, h: int, extra_max: int = 2) -> BipartiteGraph:
    """A random bipartite tree on ``u_count`` left vertices, each of degree >= h.

    Left vertices are attached one at a time to an existing right vertex,
    then given h-1 (plus up to ``extra_max``) fresh right neighbours.
    """
    edges = []
    nv = 0
    for u in range(u_count):
        if u == 0:
            first = nv
            nv += 1
        else:
            first = rng.randrange(nv)
        edges.append((u, first))
        for _ in range(h - 1 + rng.randint(0, extra_max)):
            edges.append((u, nv))
            nv += 1
    return build_graph(u_count, nv, edges)
