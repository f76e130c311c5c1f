from .matching import (
    Component,
    ForestCover,
    SearchBudgetExceeded,
    Verdict,
    find_st_matching,
    forest_cover,
    verify_st_matching,
)
from .covering import find_k_star_covering, verify_k_star_covering
from .critical_link import CriticalLinkState, check_critical_link_property, critical_link_augment

__all__ = [
    "Component",
    "CriticalLinkState",
    "ForestCover",
    "SearchBudgetExceeded",
    "Verdict",
    "check_critical_link_property",
    "critical_link_augment",
    "find_k_star_covering",
    "find_st_matching",
    "forest_cover",
    "verify_k_star_covering",
    "verify_st_matching",
]
