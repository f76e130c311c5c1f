"""(s,t)-matchings and k-star coverings in bipartite graphs."""
from .bigraph import (
    LEFT,
    RIGHT,
    BipartiteGraph,
    GraphError,
    VertexSet,
    build_graph,
    complete_bipartite,
    components,
    deficiency,
    induced_subgraph,
    is_forest,
    is_tree,
    neighborhood,
    parse_rational,
    render_rational,
)
from .conditions import (
    ConditionNotSatisfied,
    ConditionResult,
    DeficiencyReport,
    SubsetConstraints,
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
from .solver import (
    ForestCover,
    SearchBudgetExceeded,
    check_critical_link_property,
    critical_link_augment,
    find_k_star_covering,
    find_st_matching,
    verify_k_star_covering,
    verify_st_matching,
)
from .gadgets import GadgetSpec, tight_family, tight_family_ratio
from .io import dump_graph, graph_from_dict, graph_to_dict, load_graph

__version__ = "0.1.0"
