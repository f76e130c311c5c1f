"""
Matchings versus the neighbourhood condition on K_{2,3}
=======================================================

K_{2,3} has a (2,4)-matching, yet it fails the 5/3-neighbourhood
condition.  The condition is sufficient, not necessary.
"""
from fractions import Fraction

from stmatch import (
    check_condition,
    complete_bipartite,
    find_st_matching,
    threshold_main,
    threshold_summary,
    verify_st_matching,
)

G = complete_bipartite(2, 3)

# the threshold for h = 2, k = 2 and left degrees at most 3
alpha = threshold_main(2, 2, 3)
print("threshold_main(2, 2, 3) =", alpha)

res = check_condition(G, alpha)
print("condition at", alpha, "holds:", res.ok)
print("  witness", res.witness.members, "deficiency", res.deficiency)

F = find_st_matching(G, 2, 4)
print("(2,4)-matching:", F.edges)
print("  verified:", bool(verify_st_matching(G, 2, 4, F.edges)))

# as the degree bound grows the threshold climbs to the degree-free bound
for d in (3, 4, 10, 100, 10**6):
    print(f"d = {d:>7}: {threshold_main(2, 2, d)}")
print("limit:", threshold_summary(2, 2))

# at 3/2 the condition holds
print("condition at 3/2:", check_condition(G, Fraction(3, 2)).ok)
