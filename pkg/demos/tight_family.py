"""
Graphs just below the threshold without a matching
==================================================

The tight family G_n satisfies the neighbourhood condition at a ratio that
creeps up to the threshold, yet none of its members has an (h, hk)-matching.
"""
from stmatch import check_condition, find_st_matching, min_deficiency, threshold_main
from stmatch.gadgets import tight_family, tight_family_counts, tight_family_ratio

h, k, d = 2, 2, 3
print("threshold:", threshold_main(h, k, d))

for n in (1, 2, 3):
    G = tight_family(h, k, d, n).graph
    ratio = tight_family_ratio(h, k, d, n)
    rep = min_deficiency(G, ratio)
    print(f"n={n}: |U|={G.u_count} |V|={G.v_count} ratio={ratio}")
    print("   closed-form sizes:", tight_family_counts(h, k, d, n))
    print("   condition holds:", check_condition(G, ratio).ok,
          "| minimum", rep.minimum, "over", len(rep.witness), "left vertices")
    print("   (2,4)-matching:", find_st_matching(G, h, h * k))

# the ratio approaches the threshold from below
for n in (10, 100, 1000):
    print(n, threshold_main(h, k, d) - tight_family_ratio(h, k, d, n))
