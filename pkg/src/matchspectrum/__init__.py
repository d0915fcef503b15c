"""Exact perfect-matching counting for bipartite graphs through cut-space
weight distributions and the MacWilliams identity."""

from .config import CapExceededError, Caps, GraphParseError, IntegrityError
from .cutdist import (
    ClassAccumulator,
    OpStats,
    SplitPlan,
    classify,
    cut_distribution,
    cutdist_bruteforce,
    cutdist_halfenum,
    cutdist_split,
    l_vector,
    plan_split,
    shift,
    sigma,
)
from .gf2 import (
    Gf2Matrix,
    cycle_space_basis,
    enumerate_weight_distribution,
    gf2_rank,
    incidence_matrix,
    krawtchouk_table,
    macwilliams_dual_distribution,
)
from .graph import (
    BipartiteGraph,
    OddTransformResult,
    complete_bipartite,
    connected_components,
    cut_count,
    parse_graph,
    serialize_graph,
    to_odd_graph,
)
from .matching import (
    CountResult,
    count_perfect_matchings,
    enumerate_perfect_matchings,
    ryser_permanent,
    verify_lemma1,
)

__all__ = [name for name in dir() if not name.startswith("_")]
