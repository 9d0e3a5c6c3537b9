"""Semipaired domination on block graphs, exact oracles and reduction gadgets."""

from ._core import (
    BudgetExceeded,
    Graph,
    GraphError,
    ParseError,
    PreconditionError,
    exact,
    gadget,
    is_bipartite,
    is_block_graph,
    is_connected,
    is_split_graph,
    random_block_graph,
    random_bounded_degree_graph,
    solve,
    trace,
    verify,
)

__all__ = [
    "BudgetExceeded",
    "Graph",
    "GraphError",
    "ParseError",
    "PreconditionError",
    "exact",
    "gadget",
    "is_bipartite",
    "is_block_graph",
    "is_connected",
    "is_split_graph",
    "random_block_graph",
    "random_bounded_degree_graph",
    "solve",
    "trace",
    "verify",
]
