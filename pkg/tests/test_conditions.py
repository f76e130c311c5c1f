import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from stmatch.bigraph import RIGHT, build_graph, complete_bipartite, deficiency
from stmatch.conditions import (
    ConditionNotSatisfied,
    SubsetConstraints,
    ThresholdParams,
    check_condition,
    check_double_sided,
    f_value,
    g_value,
    is_redundant,
    min_deficiency,
    min_deficiency_oracle,
    redundant_edges,
    threshold_main,
    threshold_summary,
)
from stmatch.harness.oracles import f_value_bruteforce, g_value_bruteforce, min_deficiency_bruteforce

from conftest import alphas, graphs


def main_formula(h, k, d):
    # written out independently from the library, with float-free ceil
    return h - 1 + Fraction(d - h + 1, k + 1 + (d - h - 1) * -(-k // h))


@pytest.mark.parametrize("h,k,d,expected", [
    (2, 2, 3, Fraction(5, 3)),
    (2, 4, 3, Fraction(7, 5)),
    # 2 + 2/(4 + 0) with ceil(3/3) = 1
    (3, 3, 4, Fraction(5, 2)),
])
def test_threshold_main_values(h, k, d, expected):
    assert threshold_main(h, k, d) == expected


@pytest.mark.parametrize("h,k,expected", [(2, 2, 2), (2, 4, Fraction(3, 2)), (3, 7, Fraction(7, 3))])
def test_threshold_summary_values(h, k, expected):
    assert threshold_summary(h, k) == expected


@given(st.integers(2, 8), st.integers(1, 30), st.integers(1, 40))
def test_threshold_matches_formula(h, k, r):
    assert threshold_main(h, k, h + r) == main_formula(h, k, h + r)


@given(st.integers(2, 8), st.integers(1, 30), st.integers(1, 40))
def test_threshold_increases_towards_summary(h, k, r):
    lo, hi = threshold_main(h, k, h + r), threshold_main(h, k, h + r + 1)
    assert lo <= hi < threshold_summary(h, k) or (lo == hi == threshold_summary(h, k))


@pytest.mark.parametrize("params", [(1, 2, 3), (2, 0, 3), (2, 2, 2)])
def test_threshold_rejects_bad_parameters(params):
    with pytest.raises(ValueError):
        threshold_main(*params)
    with pytest.raises(ValueError):
        ThresholdParams(*params).validate()


def test_min_deficiency_k23(k23):
    rep = min_deficiency(k23, Fraction(5, 3))
    assert rep.minimum == Fraction(-1, 3)
    assert rep.witness.members == (0, 1)
    assert min_deficiency_oracle(k23, Fraction(5, 3)).minimum == Fraction(-1, 3)


def test_min_deficiency_star():
    rep = min_deficiency(complete_bipartite(1, 3), 3)
    assert rep.minimum == 0 and rep.witness.members == (0,)


@given(graphs(), alphas)
def test_empty_set_allowed_gives_nonpositive(G, alpha):
    rep = min_deficiency(G, alpha, SubsetConstraints.make(require_nonempty=False))
    assert rep.minimum <= 0


def test_contradictory_constraints_flagged(k23):
    cons = SubsetConstraints.make([0], [0])
    assert min_deficiency(k23, 1, cons).family_empty
    assert min_deficiency_oracle(k23, 1, cons).family_empty
    everything_out = SubsetConstraints.make(excluded=[0, 1])
    assert min_deficiency(k23, 1, everything_out).family_empty


def test_oracle_cap():
    with pytest.raises(ValueError):
        min_deficiency_oracle(complete_bipartite(3, 1), 1, cap=2)


def test_alpha_validation(k23):
    with pytest.raises(ValueError):
        min_deficiency(k23, Fraction(-1))
    with pytest.raises(ValueError):
        min_deficiency(k23, Fraction(1, 10**6 + 1))
    with pytest.raises(TypeError):
        check_condition(k23, 0.5)


@st.composite
def constrained(draw):
    G = draw(graphs(max_u=7, max_v=6))
    forced = draw(st.sets(st.integers(0, G.u_count - 1), max_size=2))
    excluded = draw(st.sets(st.integers(0, G.u_count - 1), max_size=3)) - forced
    nonempty = draw(st.booleans())
    return G, SubsetConstraints.make(forced, excluded, nonempty)


@settings(max_examples=300)
@given(constrained(), alphas)
def test_flow_agrees_with_enumeration(case, alpha):
    G, cons = case
    flow = min_deficiency(G, alpha, cons)
    oracle = min_deficiency_oracle(G, alpha, cons)
    direct = min_deficiency_bruteforce(G, alpha, cons.forced_in, cons.excluded, cons.require_nonempty)
    assert flow.family_empty == oracle.family_empty == (direct is None)
    if direct is None:
        return
    assert flow.minimum == oracle.minimum == direct
    assert deficiency(G, flow.witness, alpha) == flow.minimum
    assert cons.forced_in <= flow.witness.as_set()
    assert not (cons.excluded & flow.witness.as_set())
    if cons.require_nonempty:
        assert len(flow.witness) > 0


@given(graphs(max_u=6), alphas)
def test_flow_witness_is_smallest_minimiser(G, alpha):
    rep = min_deficiency(G, alpha, SubsetConstraints.make(require_nonempty=False))
    # the smallest minimiser is contained in every minimiser
    for S in range(1 << G.u_count):
        members = [u for u in range(G.u_count) if S >> u & 1]
        if deficiency(G, members, alpha) == rep.minimum:
            assert rep.witness.as_set() <= set(members)


def test_check_condition_examples(k23):
    bad = check_condition(k23, Fraction(5, 3))
    assert not bad and bad.witness.members == (0, 1) and bad.deficiency == Fraction(-1, 3)
    assert check_condition(k23, Fraction(3, 2))
    isolated = build_graph(2, 2, [(0, 0), (0, 1)])
    res = check_condition(isolated, Fraction(1, 5))
    assert not res and res.witness.members == (1,)


@given(graphs(), alphas)
def test_violation_witness_is_negative(G, alpha):
    res = check_condition(G, alpha)
    brute = min_deficiency_bruteforce(G, alpha)
    assert bool(res) == (brute >= 0)
    if not res:
        assert deficiency(G, res.witness, alpha) == res.deficiency < 0


def test_double_sided_examples():
    star3 = complete_bipartite(1, 3)
    res = check_double_sided(star3, Fraction(1, 2))
    assert not res and res.side == RIGHT and res.witness.members == (0, 1, 2)
    assert check_double_sided(complete_bipartite(1, 1), 1)
    assert check_double_sided(star3, Fraction(1, 3))


def test_f_examples(k23):
    assert f_value(complete_bipartite(1, 1), 0, 0, 1) == 0
    for u, v in k23.edges:
        assert f_value(k23, u, v, Fraction(3, 2)) == Fraction(3, 2)
    assert f_value(complete_bipartite(1, 2), 0, 0, 1) == 1


def test_g_examples(k23):
    star = complete_bipartite(1, 3)
    assert g_value(star, 0, 1, Fraction(7, 3)) == 1
    assert g_value(k23, 0, 0, Fraction(3, 2)) == Fraction(3, 2)
    c4 = complete_bipartite(2, 2)
    assert g_value(c4, 0, 0, 1) == 1


def test_f_g_require_an_edge(k23):
    G = build_graph(1, 2, [(0, 0)])
    with pytest.raises(ValueError):
        f_value(G, 0, 1, 1)
    with pytest.raises(ValueError):
        g_value(G, 0, 1, 1)


@settings(max_examples=200)
@given(graphs(max_u=6), alphas, st.data())
def test_f_g_match_direct_enumeration(G, alpha, data):
    assume(G.edge_count)
    u, v = data.draw(st.sampled_from(G.edges))
    assert f_value(G, u, v, alpha) == f_value_bruteforce(G, u, v, alpha)
    assert g_value(G, u, v, alpha) == g_value_bruteforce(G, u, v, alpha)


def test_redundancy_examples(k23):
    K12 = complete_bipartite(1, 2)
    assert is_redundant(K12, 0, 0, 1) and is_redundant(K12, 0, 1, 1)
    assert not is_redundant(complete_bipartite(1, 1), 0, 0, 1)
    assert redundant_edges(k23, Fraction(3, 2)) == list(k23.edges)
    with pytest.raises(ConditionNotSatisfied):
        is_redundant(k23, 0, 0, Fraction(5, 3))


def _largest_alpha(G):
    for a in sorted({Fraction(p, q) for q in (1, 2, 3) for p in range(1, 10)}, reverse=True):
        if check_condition(G, a):
            return a
    return None


@settings(max_examples=200)
@given(graphs(max_u=5, max_v=6))
def test_redundant_iff_deletion_keeps_condition(G):
    alpha = _largest_alpha(G)
    assume(alpha is not None)
    for u, v in G.edges:
        assert is_redundant(G, u, v, alpha) == bool(check_condition(G.remove_edge(u, v), alpha))


@settings(max_examples=200)
@given(graphs(max_u=5, max_v=6), alphas)
def test_g_at_most_f_of_sibling(G, alpha):
    for v in range(G.v_count):
        for u in G.adj_v[v]:
            for w in G.adj_v[v]:
                if w != u:
                    assert g_value(G, u, v, alpha) <= f_value(G, w, v, alpha)


@settings(max_examples=150)
@given(graphs(max_u=5, max_v=6))
def test_redundancy_free_graphs_have_g_at_most_one(G):
    alpha = _largest_alpha(G)
    assume(alpha is not None)
    for u, v in G.edges:
        if G.has_edge(u, v) and is_redundant(G, u, v, alpha):
            G = G.remove_edge(u, v)
    assert not redundant_edges(G, alpha)
    for u, v in G.edges:
        g = g_value(G, u, v, alpha)
        assert g <= 1
        assert (g == 1) == (G.degree_v(v) == 1)


def test_summary_is_limit_of_main():
    rng = random.Random(7)
    for _ in range(20):
        h, k = rng.randint(2, 9), rng.randint(1, 40)
        gap = threshold_summary(h, k) - threshold_main(h, k, 10**6)
        assert 0 <= gap < Fraction(1, 10**5)
