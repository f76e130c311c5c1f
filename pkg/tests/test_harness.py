import json
import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stmatch.bigraph import build_graph, complete_bipartite
from stmatch.conditions import check_condition
from stmatch.gadgets import tight_family
from stmatch.harness import (
    EnumerationBounds,
    condition_candidates,
    enumerate_bipartite,
    property_suite,
    random_graph,
    tree_lemma_hypotheses,
    verify_prop_counter,
    verify_star_covering_theorem,
    verify_theorem_main,
    verify_tree_lemma,
)

from conftest import graphs


def canonical(G):
    """Isomorphism-invariant key by trying every permutation (tiny graphs only)."""
    from itertools import permutations

    best = None
    for pu in permutations(range(G.u_count)):
        for pv in permutations(range(G.v_count)):
            key = tuple(sorted((pu[u], pv[v]) for u, v in G.edges))
            if best is None or key < best:
                best = key
    return (G.u_count, G.v_count, best)


def test_enumeration_tiny():
    graphs_11 = list(enumerate_bipartite(EnumerationBounds(1, 1, 1)))
    assert len(graphs_11) == 2
    assert len(list(enumerate_bipartite(EnumerationBounds(1, 1, 1, connected_only=True)))) == 1


def test_enumeration_count_2x2():
    # sizes 1..2 on each side; count labelled edge sets directly
    expected = 0
    for nu, nv in product((1, 2), repeat=2):
        pairs = [(u, v) for u in range(nu) for v in range(nv)]
        for bits in product((0, 1), repeat=len(pairs)):
            deg = [0] * nu
            for (u, _), b in zip(pairs, bits):
                deg[u] += b
            expected += max(deg) <= 2
    got = list(enumerate_bipartite(EnumerationBounds(2, 2, 2)))
    assert len(got) == expected == 2 + 4 + 4 + 16
    assert len(set(got)) == len(got)
    only_22 = [G for G in got if (G.u_count, G.v_count) == (2, 2)]
    assert len(only_22) == 16


def test_degree_bound_respected():
    for G in enumerate_bipartite(EnumerationBounds(2, 3, 1)):
        assert G.max_left_degree() <= 1


def test_degree_profile_dedup_keeps_every_profile():
    def profile(G):
        return (G.u_count, G.v_count, tuple(sorted(map(len, G.adj_u))), tuple(sorted(map(len, G.adj_v))))

    full = {profile(G) for G in enumerate_bipartite(EnumerationBounds(3, 3))}
    dedup = [profile(G) for G in enumerate_bipartite(EnumerationBounds(3, 3, dedup="degree-profile"))]
    assert set(dedup) == full and len(dedup) == len(full)


def test_symmetry_dedup_covers_every_class():
    full = {canonical(G) for G in enumerate_bipartite(EnumerationBounds(3, 3))}
    reduced = {canonical(G) for G in enumerate_bipartite(EnumerationBounds(3, 3, dedup="symmetry"))}
    assert reduced == full


def test_cap_enforced():
    with pytest.raises(ValueError):
        EnumerationBounds(7, 7)
    EnumerationBounds(9, 9, total_max=10)
    with pytest.raises(ValueError):
        EnumerationBounds(2, 2, dedup="bogus")


def test_enumeration_is_deterministic():
    b = EnumerationBounds(2, 3, dedup="symmetry")
    assert list(enumerate_bipartite(b)) == list(enumerate_bipartite(b))


def trim(G):
    keep = [v for v in range(G.v_count) if G.adj_v[v]]
    remap = {v: i for i, v in enumerate(keep)}
    return build_graph(G.u_count, len(keep), [(u, remap[v]) for u, v in G.edges])


@pytest.mark.parametrize("alpha", [Fraction(1), Fraction(3, 2), Fraction(5, 3)])
def test_condition_candidates_complete(alpha):
    bounds = EnumerationBounds(3, 4, 3)
    want = {
        canonical(trim(G)) for G in enumerate_bipartite(bounds)
        if check_condition(G, alpha)
    }
    got = set()
    for G in condition_candidates(3, 4, 3, alpha):
        assert check_condition(G, alpha)
        assert all(G.adj_v)
        got.add(canonical(G))
    assert got == want


def test_random_graph_is_reproducible():
    a = [random_graph(random.Random(5), 6, 6) for _ in range(3)]
    b = [random_graph(random.Random(5), 6, 6) for _ in range(3)]
    assert a == b


# -- campaigns ---------------------------------------------------------------

def test_theorem_main_small():
    report = verify_theorem_main(2, 2, 3, EnumerationBounds(3, 6, 3))
    assert report.passed and not report.inconclusive
    assert report.graphs_examined == report.condition_holders > 0


def test_theorem_main_streams_agree():
    bounds = EnumerationBounds(2, 4, 3)
    pruned = verify_theorem_main(2, 2, 3, bounds)
    full = verify_theorem_main(2, 2, 3, bounds, stream="full")
    assert pruned.passed and full.passed
    assert full.condition_holders >= pruned.condition_holders > 0


def test_theorem_main_detects_injected_failure():
    G1 = tight_family(2, 2, 3, 1).graph
    report = verify_theorem_main(
        2, 2, 3, EnumerationBounds(2, 4, 3), alpha=Fraction(11, 7), extra_graphs=[G1]
    )
    assert not report.passed
    (bad,) = report.counterexamples
    assert bad["graph"]["u"] == 7 and bad["check"].startswith("no matching")
    json.loads(report.to_json())


def test_theorem_main_empty_bounds():
    report = verify_theorem_main(2, 2, 3, EnumerationBounds(0, 3, 3))
    assert report.passed and report.graphs_examined == 0


def test_budget_exhaustion_reported():
    G = tight_family(2, 2, 3, 2).graph
    report = verify_theorem_main(
        2, 2, 3, EnumerationBounds(0, 1), alpha=Fraction(14, 10), extra_graphs=[G], budget=1
    )
    assert report.passed and len(report.inconclusive) == 1


def test_workers_do_not_change_the_report():
    bounds = EnumerationBounds(3, 5, 3)
    one = verify_theorem_main(2, 2, 3, bounds)
    two = verify_theorem_main(2, 2, 3, bounds, workers=2)
    assert one.to_json() == two.to_json()


def test_prop_counter_small():
    report = verify_prop_counter(2, 2, 3, [1, 2])
    assert report.passed and report.condition_holders == 2
    assert report.checks["no matching (exhaustive search)"] == 2


def test_prop_counter_budget():
    report = verify_prop_counter(2, 2, 3, [1], budget=1)
    assert report.passed and len(report.inconclusive) == 1


def test_tree_lemma_small():
    report = verify_tree_lemma(Fraction(5, 3), EnumerationBounds(3, 5))
    assert report.passed and report.condition_holders > 0


def test_tree_lemma_filters():
    assert not tree_lemma_hypotheses(complete_bipartite(2, 2), Fraction(1))
    assert not tree_lemma_hypotheses(complete_bipartite(2, 2), Fraction(3, 2))
    assert not tree_lemma_hypotheses(build_graph(1, 3, [(0, 0), (0, 1)]), Fraction(1))
    chain = build_graph(2, 3, [(0, 0), (0, 1), (1, 1), (1, 2)])
    assert tree_lemma_hypotheses(chain, Fraction(3, 2))


def test_tree_lemma_streams_agree():
    bounds = EnumerationBounds(3, 4)
    a = verify_tree_lemma(Fraction(3, 2), bounds)
    b = verify_tree_lemma(Fraction(3, 2), bounds, stream="full")
    assert a.passed and b.passed and a.condition_holders > 0 and b.condition_holders >= a.condition_holders


def test_star_covering_small():
    report = verify_star_covering_theorem((1, 2), EnumerationBounds(3, 3, dedup="symmetry"))
    assert report.passed and report.graphs_examined > 0


def test_property_suite_is_deterministic():
    a = property_suite(10, (6, 6), seed=3, triples=200)
    b = property_suite(10, (6, 6), seed=3, triples=200)
    assert a.passed
    assert a.to_json() == b.to_json()
    assert a.checks["union identity"] == 200


@settings(max_examples=50, deadline=None)
@given(graphs(max_u=4, max_v=4))
def test_report_json_round_trips(G):
    report = verify_theorem_main(2, 2, 3, EnumerationBounds(0, 1), alpha=1, extra_graphs=[G])
    data = json.loads(report.to_json())
    assert data["passed"] == report.passed
    assert "elapsed" not in data and "elapsed" in json.loads(report.to_json(timing=True))
