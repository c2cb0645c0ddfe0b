"""Efficient edge domination (dominating induced matchings) on neighborhood-star-free graphs."""

from .dim import (
    B,
    W,
    Color,
    PedClass,
    brute_force_dims,
    brute_force_peds,
    classify_ped,
    coloring_from_dim,
    dim_from_coloring,
    is_dim,
    is_ped,
    validate_partial,
    validate_total,
)
from .graph import Graph, build_graph, enumerate_triangles, induced_subgraph
from .patterns import find_induced, induced_cycles_up_to, is_cricket_free, is_nsf, named_graph
from .reduction import (
    ChainScheme,
    ReductionTrace,
    assignment_to_coloring,
    coloring_to_assignment,
    main_transformation,
    replace_edges_with_chains,
    subdivide_edge_3x,
)
from .sat import Formula3, associated_graph, brute_force_1in3, positivize, split_variables
from .solver import solve

__version__ = "0.1.0"
