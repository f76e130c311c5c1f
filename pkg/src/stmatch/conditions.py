"""Neighbourhood conditions and the deficiency calculus.

For a set S of left vertices the deficiency is h(S, alpha) = |Γ(S)| - alpha|S|.
Minimising it over a family of sets is a closure problem: with alpha = p/q,
minimise q|Γ(S)| - p|S|.  That is solved with a single min-cut on the network

    source --p--> u --inf--> v --q--> sink          (u in U, v in Γ(u))

whose source side, intersected with U, is a minimiser.  Forced vertices get
an infinite source arc, excluded vertices are left out of the network.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple

from .bigraph import (
    LEFT,
    RIGHT,
    BipartiteGraph,
    VertexSet,
    as_rational,
)
from .flow import FlowNetwork

MAX_DENOMINATOR = 10**6
ORACLE_CAP = 20


class ConditionNotSatisfied(ValueError):
    """A routine that needs the alpha-neighbourhood condition got a graph without it."""


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


class ThresholdParams(NamedTuple):
    h: int
    k: int
    d: int

    @property
    def r(self) -> int:
        return self.d - self.h

    def validate(self) -> "ThresholdParams":
        h, k, d = self
        if not all(isinstance(x, int) for x in self):
            raise TypeError("h, k, d must be integers")
        if k < 1 or h < 2 or d <= h:
            raise ValueError(f"need k >= 1 and d > h >= 2, got h={h}, k={k}, d={d}")
        return self


def threshold_main(h: int, k: int, d: int) -> Fraction:
    """Sufficient ratio for an (h, hk)-matching when left degrees are at most d."""
    ThresholdParams(h, k, d).validate()
    c = ceil_div(k, h)
    return h - 1 + Fraction(d - h + 1, k + 1 + (d - h - 1) * c)


def threshold_summary(h: int, k: int) -> Fraction:
    """Degree-free sufficient ratio, the d -> infinity limit of :func:`threshold_main`."""
    if not (isinstance(h, int) and isinstance(k, int)):
        raise TypeError("h, k must be integers")
    if k < 1 or h < 2:
        raise ValueError(f"need k >= 1 and h >= 2, got h={h}, k={k}")
    return h - 1 + Fraction(1, ceil_div(k, h))


@dataclass(frozen=True)
class SubsetConstraints:
    forced_in: frozenset[int] = field(default_factory=frozenset)
    excluded: frozenset[int] = field(default_factory=frozenset)
    require_nonempty: bool = True

    @classmethod
    def make(cls, forced_in: Iterable[int] = (), excluded: Iterable[int] = (), require_nonempty: bool = True):
        return cls(frozenset(forced_in), frozenset(excluded), require_nonempty)

    @property
    def contradictory(self) -> bool:
        return bool(self.forced_in & self.excluded)


UNCONSTRAINED = SubsetConstraints()


@dataclass(frozen=True)
class DeficiencyReport:
    minimum: Fraction | None
    witness: VertexSet | None
    family_empty: bool = False


def _split_alpha(alpha) -> tuple[int, int]:
    a = as_rational(alpha)
    if a < 0:
        raise ValueError("alpha must be nonnegative")
    if a.denominator > MAX_DENOMINATOR:
        raise ValueError(f"alpha denominator exceeds {MAX_DENOMINATOR}")
    return a.numerator, a.denominator


def _validate(G: BipartiteGraph, constraints: SubsetConstraints) -> None:
    for x in constraints.forced_in | constraints.excluded:
        if not 0 <= x < G.u_count:
            raise ValueError(f"constraint vertex {x} out of range")


def _closure_min(G: BipartiteGraph, p: int, q: int, forced, excluded) -> tuple[int, list[int]]:
    """Minimum of q|Γ(S)| - p|S| over forced ⊆ S ⊆ U \\ excluded.

    Returns the scaled minimum and the smallest minimiser.
    """
    nu, nv = G.u_count, G.v_count
    inf = p * nu + q * nv + 1
    net = FlowNetwork(2 + nu + nv)
    selectable = 0
    used_v = set()
    for u in range(nu):
        if u in excluded:
            continue
        selectable += 1
        net.add_arc(0, 2 + u, inf if u in forced else p)
        for v in G.adj_u[u]:
            net.add_arc(2 + u, 2 + nu + v, inf)
            used_v.add(v)
    for v in sorted(used_v):
        net.add_arc(2 + nu + v, 1, q)
    cut = net.max_flow(0, 1)
    side = net.reachable(0)
    witness = [u for u in range(nu) if side[2 + u]]
    return cut - p * selectable, witness


def min_deficiency(G: BipartiteGraph, alpha, constraints: SubsetConstraints = UNCONSTRAINED) -> DeficiencyReport:
    """Exact minimum of h(S, alpha) over the sets allowed by ``constraints``.

    The witness is the smallest minimiser (source side of the residual
    network).  When the only minimiser of the relaxed problem is the empty
    set but a nonempty set is required, each selectable vertex is forced in
    turn and the first best result (ascending vertex order) is returned.
    """
    p, q = _split_alpha(alpha)
    _validate(G, constraints)
    forced, excluded = constraints.forced_in, constraints.excluded
    selectable = [u for u in range(G.u_count) if u not in excluded]
    if constraints.contradictory or (constraints.require_nonempty and not selectable):
        return DeficiencyReport(None, None, family_empty=True)

    value, witness = _closure_min(G, p, q, forced, excluded)
    if witness or not constraints.require_nonempty:
        return DeficiencyReport(Fraction(value, q), VertexSet.of(LEFT, witness))

    best = None
    for w in selectable:
        val, wit = _closure_min(G, p, q, forced | {w}, excluded)
        if best is None or val < best[0]:
            best = (val, wit)
    return DeficiencyReport(Fraction(best[0], q), VertexSet.of(LEFT, best[1]))


def min_deficiency_oracle(
    G: BipartiteGraph,
    alpha,
    constraints: SubsetConstraints = UNCONSTRAINED,
    cap: int = ORACLE_CAP,
) -> DeficiencyReport:
    """Brute-force counterpart of :func:`min_deficiency` by subset enumeration."""
    if G.u_count > cap:
        raise ValueError(f"oracle limited to |U| <= {cap}, got {G.u_count}")
    a = as_rational(alpha)
    _validate(G, constraints)
    if constraints.contradictory:
        return DeficiencyReport(None, None, family_empty=True)
    masks = G.left_masks()
    forced = sum(1 << u for u in constraints.forced_in)
    excluded = sum(1 << u for u in constraints.excluded)
    n = G.u_count
    gamma = [0] * (1 << n)
    best = None
    for S in range(1 << n):
        if S:
            low = S & -S
            gamma[S] = gamma[S ^ low] | masks[low.bit_length() - 1]
        if S & forced != forced or S & excluded:
            continue
        if S == 0 and constraints.require_nonempty:
            continue
        val = bin(gamma[S]).count("1") - a * bin(S).count("1")
        key = (val, bin(S).count("1"))
        if best is None or key < best[0]:
            best = (key, S)
    if best is None:
        return DeficiencyReport(None, None, family_empty=True)
    S = best[1]
    return DeficiencyReport(best[0][0], VertexSet.of(LEFT, [u for u in range(n) if S >> u & 1]))


@dataclass(frozen=True)
class ConditionResult:
    """Outcome of a neighbourhood-condition check.

    On a violation ``witness`` is a vertex set on ``side`` with
    ``deficiency < 0``.
    """

    ok: bool
    alpha: Fraction
    witness: VertexSet | None = None
    deficiency: Fraction | None = None
    side: str = LEFT

    def __bool__(self) -> bool:
        return self.ok


def check_condition(G: BipartiteGraph, alpha) -> ConditionResult:
    """Does |Γ(S)| >= alpha|S| hold for every S ⊆ U?"""
    p, q = _split_alpha(alpha)
    a = Fraction(p, q)
    if G.u_count == 0:
        return ConditionResult(True, a)
    value, witness = _closure_min(G, p, q, frozenset(), frozenset())
    if value >= 0:
        return ConditionResult(True, a)
    return ConditionResult(False, a, VertexSet.of(LEFT, witness), Fraction(value, q))


def check_double_sided(G: BipartiteGraph, alpha) -> ConditionResult:
    """The condition on subsets of U and, via the mirror graph, of V."""
    left = check_condition(G, alpha)
    if not left.ok:
        return left
    right = check_condition(G.mirror(), alpha)
    if not right.ok:
        return ConditionResult(False, right.alpha, VertexSet.of(RIGHT, right.witness), right.deficiency, RIGHT)
    return left


def _require_edge(G: BipartiteGraph, u: int, v: int) -> None:
    if not G.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")


def f_report(G: BipartiteGraph, u: int, v: int, alpha) -> DeficiencyReport:
    # A ∈ F_uv  <=>  u ∈ A and A avoids every other neighbour of v
    _require_edge(G, u, v)
    others = frozenset(G.adj_v[v]) - {u}
    return min_deficiency(G, alpha, SubsetConstraints(frozenset({u}), others))


def g_report(G: BipartiteGraph, u: int, v: int, alpha) -> DeficiencyReport:
    """Minimum of h over sets avoiding u that still see v.

    A pendant v (degree 1) has an empty family; the value is then fixed at 1.
    """
    _require_edge(G, u, v)
    if G.degree_v(v) == 1:
        return DeficiencyReport(Fraction(1), None, family_empty=True)
    best = None
    for w in G.adj_v[v]:
        if w == u:
            continue
        rep = min_deficiency(G, alpha, SubsetConstraints(frozenset({w}), frozenset({u})))
        if best is None or rep.minimum < best.minimum:
            best = rep
    return best


def f_value(G: BipartiteGraph, u: int, v: int, alpha) -> Fraction:
    return f_report(G, u, v, alpha).minimum


def g_value(G: BipartiteGraph, u: int, v: int, alpha) -> Fraction:
    return g_report(G, u, v, alpha).minimum


def is_redundant(G: BipartiteGraph, u: int, v: int, alpha) -> bool:
    """Whether deleting uv keeps the alpha-neighbourhood condition (f >= 1)."""
    if not check_condition(G, alpha):
        raise ConditionNotSatisfied("graph does not satisfy the neighbourhood condition")
    return f_value(G, u, v, alpha) >= 1


def redundant_edges(G: BipartiteGraph, alpha) -> list[tuple[int, int]]:
    if not check_condition(G, alpha):
        raise ConditionNotSatisfied("graph does not satisfy the neighbourhood condition")
    return [(u, v) for u, v in G.edges if f_value(G, u, v, alpha) >= 1]

