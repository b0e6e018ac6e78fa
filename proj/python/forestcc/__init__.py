"""Forest closeness centrality: exact, UST-sampled, and JLT estimators.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from forestcc._core import (
    DiagResult,
    Graph,
    GroupResult,
    __version__,
    approx_diag,
    avg_abs_error,
    brute_force_best_group,
    compute_eta,
    compute_q,
    compute_tau,
    disjoint_union,
    exact_diag,
    exact_farness_closeness,
    forest_distance,
    forest_matrix,
    gen_complete,
    gen_er,
    gen_grid,
    gen_path,
    gen_star,
    greedy_group,
    group_farness,
    jlt_diag,
    kendall_tau,
    load_graph,
    max_abs_error,
    rank_vertices,
    save_graph,
)

__all__ = [
    "DiagResult",
    "Graph",
    "GroupResult",
    "__version__",
    "approx_diag",
    "avg_abs_error",
    "brute_force_best_group",
    "compute_eta",
    "compute_q",
    "compute_tau",
    "disjoint_union",
    "exact_diag",
    "exact_farness_closeness",
    "forest_distance",
    "forest_matrix",
    "gen_complete",
    "gen_er",
    "gen_grid",
    "gen_path",
    "gen_star",
    "greedy_group",
    "group_farness",
    "jlt_diag",
    "kendall_tau",
    "load_graph",
    "max_abs_error",
    "rank_vertices",
    "save_graph",
]
