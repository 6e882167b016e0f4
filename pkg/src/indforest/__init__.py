"""Exact induced forests, induced linear forests and induced paths in small graphs."""

from .graph import (
    Graph,
    GraphFamily,
    complement,
    complete,
    complete_bipartite,
    connected_components,
    cycle,
    degree_sequence,
    empty,
    make_graph,
    path,
    regularity,
    shape_check,
    standard,
)
from .graphio import decode_graph6, encode_graph6, read_stream
from .solvers import (
    SearchBudget,
    SolveResult,
    longest_induced_path,
    max_induced_forest,
    max_induced_linear_forest,
    oracle_subset_scan,
)
from .greedy import greedy_partition, verify_claims
from .bounds import (
    caro_wei_t,
    construct_extremal_lip,
    f_ratio,
    lif_regular_lower_bound,
    lip_order_lower_bound,
    lip_upper_bound,
    misc_lower_bounds,
    nordhaus_gaddum_check,
)
from .enumeration import GraphFilter, canonical_form, enumerate_connected, random_regular

__version__ = "0.1.0"
