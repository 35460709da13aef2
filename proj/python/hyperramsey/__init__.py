"""Asymmetric Ramsey properties of uniform hypergraphs."""

from ._core import (
    BudgetExceeded,
    Coloring,
    Hypergraph,
    InternalContradiction,
    NoneExists,
    NotFound,
    arrows,
    base_coloring,
    check_cover_inequality,
    clean,
    clique_density,
    enumerate_cliques,
    expected_cover_bound,
    export_cnf,
    is_conformal,
    is_good_coloring,
    is_r_linear,
    lift_coloring,
    linearity_violations,
    max_r_density,
    minimal_covers,
    phi,
    primal_r_graph,
    ramsey_number,
    reduction_sequence,
    run_trials,
    sample,
)

__version__ = "0.1.0"
__all__ = [name for name in dir() if not name.startswith("_")]
