from .enumeration import (
    DEDUP_MODES,
    EDGE_CAP,
    EnumerationBounds,
    condition_candidates,
    enumerate_bipartite,
    graph_from_masks,
    random_graph,
    random_tree,
)
from .oracles import (
    f_value_bruteforce,
    g_value_bruteforce,
    k_star_covering_exists_bruteforce,
    min_deficiency_bruteforce,
)
from .campaigns import (
    CampaignReport,
    property_suite,
    tree_lemma_hypotheses,
    verify_prop_counter,
    verify_star_covering_theorem,
    verify_theorem_main,
    verify_tree_lemma,
)

__all__ = [
    "CampaignReport",
    "DEDUP_MODES",
    "EDGE_CAP",
    "EnumerationBounds",
    "condition_candidates",
    "enumerate_bipartite",
    "f_value_bruteforce",
    "g_value_bruteforce",
    "graph_from_masks",
    "k_star_covering_exists_bruteforce",
    "min_deficiency_bruteforce",
    "property_suite",
    "random_graph",
    "random_tree",
    "tree_lemma_hypotheses",
    "verify_prop_counter",
    "verify_star_covering_theorem",
    "verify_theorem_main",
    "verify_tree_lemma",
]
