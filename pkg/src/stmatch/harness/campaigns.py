"""Verification campaigns over enumerated and sampled graphs.

Each campaign folds a deterministic stream of graphs into a
:class:`CampaignReport`.  A report passes when it holds no counterexamples;
budget exhaustion is tracked separately as ``inconclusive`` and never counts
as a pass on its own.
"""
from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import partial
from typing import Callable, Iterable

from ..bigraph import (
    BipartiteGraph,
    as_rational,
    components,
    deficiency,
    is_tree,
    neighborhood,
)
from ..conditions import (
    SubsetConstraints,
    UNCONSTRAINED,
    check_condition,
    check_double_sided,
    f_value,
    g_value,
    is_redundant,
    min_deficiency,
    min_deficiency_oracle,
    redundant_edges,
    threshold_main,
)
from ..gadgets import tight_family, tight_family_counts, tight_family_ratio
from ..io import graph_to_dict, to_jsonable
from ..solver import (
    SearchBudgetExceeded,
    find_k_star_covering,
    find_st_matching,
    verify_k_star_covering,
    verify_st_matching,
)
from .enumeration import EnumerationBounds, condition_candidates, enumerate_bipartite, random_graph
from .oracles import (
    f_value_bruteforce,
    g_value_bruteforce,
    k_star_covering_exists_bruteforce,
)

DEFAULT_BOUNDS = EnumerationBounds(u_max=5, v_max=8, d_max=4)
STREAMS = ("pruned", "full")


@dataclass
class CampaignReport:
    name: str
    params: dict = field(default_factory=dict)
    graphs_examined: int = 0
    condition_holders: int = 0
    counterexamples: list = field(default_factory=list)
    inconclusive: list = field(default_factory=list)
    skipped: int = 0
    checks: dict = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def tally(self, name: str, amount: int = 1) -> None:
        self.checks[name] = self.checks.get(name, 0) + amount

    def fail(self, check: str, G: BipartiteGraph | None, **detail) -> None:
        entry = {"check": check, "detail": to_jsonable(detail)}
        if G is not None:
            entry["graph"] = graph_to_dict(G)
        self.counterexamples.append(entry)

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "name": self.name,
            "params": to_jsonable(self.params),
            "passed": self.passed,
            "graphs_examined": self.graphs_examined,
            "condition_holders": self.condition_holders,
            "counterexamples": self.counterexamples,
            "inconclusive": self.inconclusive,
            "skipped": self.skipped,
            "checks": dict(sorted(self.checks.items())),
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def to_json(self, timing: bool = False) -> str:
        """Canonical JSON; wall-clock time is left out unless asked for, so
        equal inputs give byte-identical output."""
        return json.dumps(self.to_dict(timing), sort_keys=True)


def _paired(graphs: Iterable[BipartiteGraph], fn: Callable, workers: int):
    """Pair each graph with ``fn(graph)`` in stream order, optionally over a
    process pool (ordered map, so the fold is unchanged)."""
    if workers <= 1:
        for G in graphs:
            yield G, fn(G)
        return
    graphs = list(graphs)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from zip(graphs, pool.map(fn, graphs, chunksize=64))


# -- main threshold: the condition gives an (h, hk)-matching -----------------

def _main_case(G: BipartiteGraph, alpha: Fraction, s: int, t: int, budget: int, assume_condition: bool) -> dict:
    cond = check_condition(G, alpha)
    if not cond:
        if assume_condition:
            return {"kind": "disagree", "witness": cond.witness, "deficiency": cond.deficiency}
        return {"kind": "skip"}
    try:
        F = find_st_matching(G, s, t, budget=budget)
    except SearchBudgetExceeded as exc:
        return {"kind": "inconclusive", "nodes": exc.nodes}
    if F is None:
        rep = min_deficiency(G, alpha)
        return {"kind": "none", "min_deficiency": rep.minimum, "argmin": rep.witness}
    verdict = verify_st_matching(G, s, t, F.edges)
    if not verdict:
        return {"kind": "rejected", "reason": verdict.reason, "edges": F.edges}
    return {"kind": "ok"}


def verify_theorem_main(
    h: int,
    k: int,
    d: int,
    bounds: EnumerationBounds | None = None,
    *,
    alpha=None,
    extra_graphs: Iterable[BipartiteGraph] = (),
    budget: int = 1_000_000,
    workers: int = 1,
    stream: str = "pruned",
) -> CampaignReport:
    """Search for graphs meeting the neighbourhood condition at ``alpha``
    (default: the main threshold) that have no (h, hk)-matching.

    ``stream="pruned"`` walks only graphs satisfying the condition, up to
    isomorphism and isolated right vertices (both irrelevant here), using a
    brute-force subset scan; each is then rechecked by the flow code and any
    disagreement is itself a counterexample.  ``stream="full"`` enumerates
    ``bounds`` directly.  ``extra_graphs`` are appended after the stream.
    """
    if stream not in STREAMS:
        raise ValueError(f"stream must be one of {STREAMS}")
    bounds = bounds or DEFAULT_BOUNDS
    alpha = threshold_main(h, k, d) if alpha is None else as_rational(alpha)
    d_eff = d if bounds.d_max is None else min(d, bounds.d_max)
    report = CampaignReport(
        "theorem-main",
        {"h": h, "k": k, "d": d, "alpha": alpha, "bounds": asdict(bounds), "stream": stream, "budget": budget},
    )
    started = time.perf_counter()

    if stream == "pruned":
        graphs = (
            G for G in condition_candidates(bounds.u_max, bounds.v_max, d_eff, alpha)
            if G.u_count >= bounds.u_min and (not bounds.connected_only or _connected(G))
        )
    else:
        graphs = (G for G in enumerate_bipartite(bounds) if G.max_left_degree() <= d)

    fn = partial(_main_case, alpha=alpha, s=h, t=h * k, budget=budget, assume_condition=stream == "pruned")
    for G, res in _paired(graphs, fn, workers):
        _record_main(report, G, res)
    for G in extra_graphs:
        if G.max_left_degree() > d:
            report.skipped += 1
            continue
        _record_main(report, G, _main_case(G, alpha, h, h * k, budget, False))

    report.elapsed = time.perf_counter() - started
    return report


def _record_main(report: CampaignReport, G: BipartiteGraph, res: dict) -> None:
    report.graphs_examined += 1
    kind = res["kind"]
    if kind == "skip":
        report.skipped += 1
        return
    if kind == "disagree":
        report.fail("enumeration and flow disagree on the condition", G, **res)
        return
    report.condition_holders += 1
    if kind == "inconclusive":
        report.inconclusive.append({"graph": graph_to_dict(G), "nodes": res["nodes"]})
    elif kind == "none":
        report.fail("no matching (exhaustive search)", G, **res)
    elif kind == "rejected":
        report.fail("solver output rejected by verifier", G, **res)
    else:
        report.tally("matching found and verified")


# -- tight family ------------------------------------------------------------

def verify_prop_counter(h: int, k: int, d: int, n_range: Iterable[int], budget: int = 1_000_000) -> CampaignReport:
    """Check the tight family G_n for each n: the condition holds at its ratio
    with minimum 0 at U_n, no (h, hk)-matching exists, the ratio sits below the
    main threshold, the sizes match the closed form, and the ratio grows with n."""
    n_values = sorted(set(n_range))
    report = CampaignReport("tight-family", {"h": h, "k": k, "d": d, "n": n_values, "budget": budget})
    started = time.perf_counter()
    bound = threshold_main(h, k, d)
    previous = None
    for n in n_values:
        gadget = tight_family(h, k, d, n)
        G = gadget.graph
        ratio = tight_family_ratio(h, k, d, n)
        report.graphs_examined += 1

        counts = (G.u_count, G.v_count)
        if counts != tight_family_counts(h, k, d, n) or G.max_left_degree() > d:
            report.fail("construction size or degree", G, n=n, counts=counts, max_left_degree=G.max_left_degree())
        else:
            report.tally("sizes match closed form")

        if Fraction(G.v_count, G.u_count) != ratio:
            report.fail("ratio |V|/|U| differs from closed form", G, n=n, ratio=ratio)

        cond = check_condition(G, ratio)
        rep = min_deficiency(G, ratio)
        if cond and rep.minimum == 0 and len(rep.witness) == G.u_count:
            report.condition_holders += 1
            report.tally("condition holds, minimum 0 at all of U")
        else:
            report.fail("condition at the ratio", G, n=n, ratio=ratio, minimum=rep.minimum, argmin=rep.witness)

        if not ratio < bound:
            report.fail("ratio below the main threshold", G, n=n, ratio=ratio, threshold=bound)
        else:
            report.tally("ratio below threshold")

        if previous is not None and not previous < ratio:
            report.fail("ratio increases with n", G, n=n, ratio=ratio, previous=previous)
        previous = ratio

        try:
            F = find_st_matching(G, h, h * k, budget=budget)
        except SearchBudgetExceeded as exc:
            report.inconclusive.append({"n": n, "nodes": exc.nodes})
            continue
        if F is None:
            report.tally("no matching (exhaustive search)")
        else:
            report.fail("a matching exists", G, n=n, edges=F.edges)
    report.elapsed = time.perf_counter() - started
    return report


# -- tree lemma --------------------------------------------------------------

def tree_lemma_hypotheses(G: BipartiteGraph, alpha: Fraction) -> bool:
    """No isolated vertices, 0 <= h(U) < 1, every proper nonempty S has
    h(S) > h(U), and no edge is alpha-redundant."""
    if any(not a for a in G.adj_u) or any(not a for a in G.adj_v):
        return False
    all_u = range(G.u_count)
    h_U = deficiency(G, all_u, alpha)
    if not 0 <= h_U < 1:
        return False
    for u in all_u:
        rep = min_deficiency(G, alpha, SubsetConstraints.make(excluded=[u]))
        if not rep.family_empty and rep.minimum <= h_U:
            return False
    return not redundant_edges(G, alpha)


def verify_tree_lemma(alpha, bounds: EnumerationBounds | None = None, *, stream: str = "pruned") -> CampaignReport:
    """Every graph meeting :func:`tree_lemma_hypotheses` must be a tree.

    The hypotheses imply the condition itself, so the pruned stream (graphs
    satisfying the condition, up to isomorphism) loses nothing.
    """
    if stream not in STREAMS:
        raise ValueError(f"stream must be one of {STREAMS}")
    alpha = as_rational(alpha)
    bounds = bounds or EnumerationBounds(u_max=4, v_max=6)
    report = CampaignReport("tree-lemma", {"alpha": alpha, "bounds": asdict(bounds), "stream": stream})
    started = time.perf_counter()
    if stream == "pruned":
        d = bounds.v_max if bounds.d_max is None else bounds.d_max
        graphs = condition_candidates(bounds.u_max, bounds.v_max, d, alpha)
    else:
        graphs = enumerate_bipartite(bounds)
    for G in graphs:
        report.graphs_examined += 1
        if not tree_lemma_hypotheses(G, alpha):
            report.skipped += 1
            continue
        report.condition_holders += 1
        if is_tree(G):
            report.tally("is a tree")
        else:
            report.fail("hypotheses hold but graph is not a tree", G)
    report.elapsed = time.perf_counter() - started
    return report


# -- star coverings ----------------------------------------------------------

def _star_case(G: BipartiteGraph, k_values: tuple[int, ...]) -> list[dict]:
    out = []
    for k in k_values:
        cover = find_k_star_covering(G, k)
        constructive = cover is not None
        if constructive and not verify_k_star_covering(G, k, cover.edges):
            out.append({"k": k, "problem": "constructed covering rejected", "edges": cover.edges})
            continue
        cond = check_double_sided(G, Fraction(1, k))
        brute = k_star_covering_exists_bruteforce(G, k)
        if brute is not None and not verify_k_star_covering(G, k, brute):
            out.append({"k": k, "problem": "exhaustive covering rejected", "edges": brute})
            continue
        if not (constructive == bool(cond) == (brute is not None)):
            out.append({
                "k": k,
                "problem": "disagreement",
                "constructive": constructive,
                "condition": bool(cond),
                "exhaustive": brute is not None,
            })
            continue
        out.append({"k": k, "holds": bool(cond)})
    return out


def verify_star_covering_theorem(
    k_values: Iterable[int] = (1, 2, 3),
    bounds: EnumerationBounds | None = None,
    *,
    workers: int = 1,
) -> CampaignReport:
    """Three-way agreement between the constructive covering, the
    double-sided 1/k condition and exhaustive search."""
    k_values = tuple(k_values)
    bounds = bounds or EnumerationBounds(u_max=9, v_max=9, total_max=10, dedup="symmetry")
    report = CampaignReport("star-covering", {"k": list(k_values), "bounds": asdict(bounds)})
    started = time.perf_counter()
    fn = partial(_star_case, k_values=k_values)
    for G, results in _paired(enumerate_bipartite(bounds), fn, workers):
        report.graphs_examined += 1
        for res in results:
            if "problem" in res:
                report.fail(res.pop("problem"), G, **res)
            elif res["holds"]:
                report.condition_holders += 1
                report.tally(f"k={res['k']}: covering exists")
            else:
                report.tally(f"k={res['k']}: no covering")
    report.elapsed = time.perf_counter() - started
    return report


# -- sampled properties ------------------------------------------------------

ALPHAS = tuple(sorted({Fraction(p, q) for q in (1, 2, 3, 4) for p in range(1, 4 * q + 1)}))


def _random_subset(rng: random.Random, n: int) -> list[int]:
    return [u for u in range(n) if rng.random() < 0.5]


def _largest_alpha(G: BipartiteGraph) -> Fraction | None:
    ok = [a for a in ALPHAS if check_condition(G, a)]
    return ok[-1] if ok else None


def _peel_redundant(G: BipartiteGraph, alpha: Fraction) -> BipartiteGraph:
    # one pass suffices: an edge that is not redundant never becomes so
    for u, v in G.edges:
        if is_redundant(G, u, v, alpha):
            G = G.remove_edge(u, v)
    return G


def _union_identity(report: CampaignReport, rng: random.Random, triples: int, u_max: int, v_max: int) -> None:
    for _ in range(triples):
        G = random_graph(rng, u_max, v_max)
        alpha = rng.choice(ALPHAS)
        A = _random_subset(rng, G.u_count)
        B = _random_subset(rng, G.u_count)
        union = sorted(set(A) | set(B))
        inter = sorted(set(A) & set(B))
        lhs = deficiency(G, union, alpha)
        overlap = len(neighborhood(G, A).as_set() & neighborhood(G, B).as_set()) - len(neighborhood(G, inter))
        rhs = deficiency(G, A, alpha) + deficiency(G, B, alpha) - deficiency(G, inter, alpha) - overlap
        if lhs != rhs:
            report.fail("union identity", G, alpha=alpha, A=A, B=B, lhs=lhs, rhs=rhs)
        else:
            report.tally("union identity")


def _oracle_agreement(report: CampaignReport, G: BipartiteGraph, rng: random.Random, edges_per_graph: int) -> None:
    alpha = rng.choice(ALPHAS)
    families = [("unconstrained", UNCONSTRAINED)]
    sample = rng.sample(list(G.edges), min(edges_per_graph, G.edge_count))
    for u, v in sample:
        families.append((f"F({u},{v})", SubsetConstraints.make([u], set(G.adj_v[v]) - {u})))
        for w in G.adj_v[v]:
            if w != u:
                families.append((f"G({u},{v}) via {w}", SubsetConstraints.make([w], [u])))
    for label, cons in families:
        flow = min_deficiency(G, alpha, cons)
        oracle = min_deficiency_oracle(G, alpha, cons)
        if flow.minimum != oracle.minimum or flow.family_empty != oracle.family_empty:
            report.fail("flow vs enumeration", G, alpha=alpha, family=label, flow=flow.minimum, oracle=oracle.minimum)
            continue
        if flow.witness is not None and deficiency(G, flow.witness, alpha) != flow.minimum:
            report.fail("flow witness attains minimum", G, alpha=alpha, family=label, witness=flow.witness)
            continue
        report.tally("flow vs enumeration")
    for u, v in sample:
        pairs = [
            ("f", f_value(G, u, v, alpha), f_value_bruteforce(G, u, v, alpha)),
            ("g", g_value(G, u, v, alpha), g_value_bruteforce(G, u, v, alpha)),
        ]
        for name, fast, slow in pairs:
            if fast != slow:
                report.fail(f"{name} vs direct enumeration", G, alpha=alpha, edge=(u, v), fast=fast, direct=slow)
            else:
                report.tally(f"{name} vs direct enumeration")


def _redundancy_calculus(report: CampaignReport, G: BipartiteGraph) -> None:
    alpha = _largest_alpha(G)
    if alpha is None:
        report.skipped += 1
        return
    report.condition_holders += 1
    for u, v in G.edges:
        if is_redundant(G, u, v, alpha) != bool(check_condition(G.remove_edge(u, v), alpha)):
            report.fail("redundant iff deletion keeps the condition", G, alpha=alpha, edge=(u, v))
        else:
            report.tally("redundant iff deletion keeps the condition")
    for v in range(G.v_count):
        for u in G.adj_v[v]:
            g = g_value(G, u, v, alpha)
            for w in G.adj_v[v]:
                if w == u:
                    continue
                f = f_value(G, w, v, alpha)
                if g > f:
                    report.fail("g(uv) <= f(wv)", G, alpha=alpha, u=u, v=v, w=w, g=g, f=f)
                else:
                    report.tally("g(uv) <= f(wv)")
    H = _peel_redundant(G, alpha)
    if redundant_edges(H, alpha):
        report.fail("peeling leaves no redundant edge", H, alpha=alpha)
        return
    for u, v in H.edges:
        g = g_value(H, u, v, alpha)
        if g > 1 or (g == 1) != (H.degree_v(v) == 1):
            report.fail("g <= 1, equality iff pendant", H, alpha=alpha, edge=(u, v), g=g)
        else:
            report.tally("g <= 1, equality iff pendant")


def property_suite(
    sample_count: int = 500,
    size_bounds: tuple[int, int] = (12, 12),
    seed: int = 0,
    *,
    triples: int = 10_000,
    edges_per_graph: int = 3,
    redundancy_bounds: tuple[int, int] = (6, 7),
) -> CampaignReport:
    """Sampled checks: the union identity for h on ``triples`` random
    (G, A, B), flow minimisation against enumeration (and f, g against
    direct enumeration) on ``sample_count`` graphs within ``size_bounds``,
    and the redundancy calculus on ``sample_count`` smaller graphs."""
    u_max, v_max = size_bounds
    report = CampaignReport(
        "properties",
        {"sample_count": sample_count, "size_bounds": list(size_bounds), "seed": seed, "triples": triples,
         "edges_per_graph": edges_per_graph, "redundancy_bounds": list(redundancy_bounds)},
    )
    started = time.perf_counter()
    rng = random.Random(seed)
    _union_identity(report, rng, triples, u_max, v_max)
    for _ in range(sample_count):
        G = random_graph(rng, u_max, v_max)
        report.graphs_examined += 1
        _oracle_agreement(report, G, rng, edges_per_graph)
    for _ in range(sample_count):
        G = random_graph(rng, *redundancy_bounds)
        report.graphs_examined += 1
        _redundancy_calculus(report, G)
    report.elapsed = time.perf_counter() - started
    return report


def _connected(G: BipartiteGraph) -> bool:
    return len(components(G)) == 1
