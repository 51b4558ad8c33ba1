"""Intimate-core group search in weighted graphs.

Given query nodes ``Q`` and an integer ``k``, find a connected k-core that
contains every query node and has small total edge weight. The local
exploration pipeline builds a seed tree between the query nodes, grows it
level by level into a candidate k-core and then shrinks that candidate;
the global baselines shrink the maximal connected k-core instead.
"""

__version__ = "0.1.0"

from .core import (
    CoreIndex,
    core_decompose,
    kcore_of,
    load_index,
    load_or_build_index,
    maximal_connected_kcore,
    save_index,
)
from .errors import (
    BudgetExceeded,
    DepthExceeded,
    Disconnected,
    FormatError,
    InfeasibleInput,
    InfeasibleQuery,
    ParseError,
    QueryNotInCore,
    QuerySplit,
    UnknownNode,
    WeightError,
)
from .expansion import ExpansionStats, expand_to_kcore
from .graph import (
    Subgraph,
    WeightedGraph,
    connected_component_containing,
    group_weight,
    induced_subgraph,
    load_graph,
    neighbors,
    write_edge_list,
)
from .oracle import oracle_min_group
from .refine import GroupResult, RefineConfig, RunStats, protected_closure, refine
from .search import STRATEGIES, QuerySpec, global_baseline, leks_search, search
from .seedtree import SeedTree, ShortestPath, build_tree_mst, build_tree_path, dijkstra_sssp
