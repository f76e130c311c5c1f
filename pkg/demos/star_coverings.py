"""
Star coverings and the double-sided condition
=============================================

A bipartite graph can be covered by stars with at most k edges exactly
when both sides satisfy the 1/k-neighbourhood condition.
"""
from fractions import Fraction

from stmatch import build_graph, check_double_sided, complete_bipartite, find_k_star_covering
from stmatch.harness import EnumerationBounds, verify_star_covering_theorem

# a star with four leaves fits k = 4 but not k = 3
star = complete_bipartite(1, 4)
for k in (3, 4):
    res = check_double_sided(star, Fraction(1, k))
    cover = find_k_star_covering(star, k)
    print(f"k={k}: condition {res.ok}, covering {cover.edges if cover else None}")
    if not res.ok:
        print("   violated on the", res.side, "side by", res.witness.members)

# the construction peels redundant edges, then splits off tight sets
G = build_graph(3, 4, [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 3), (0, 3)])
steps = []
cover = find_k_star_covering(G, 2, on_delete=steps.append)
print("peeled", len(steps), "edges; covering", cover.edges)

# small exhaustive cross-check
report = verify_star_covering_theorem((1, 2), EnumerationBounds(3, 3, dedup="symmetry"))
print(report.graphs_examined, "graphs checked three ways, passed:", report.passed)
