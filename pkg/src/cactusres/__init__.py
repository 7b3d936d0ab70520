"""Exact resistance distances on balanced digraphs and directed cacti."""

from .digraph import (
    Digraph,
    VertexPartition,
    distance_matrix,
    is_balanced,
    is_directed_cactus,
    is_strongly_connected,
    laplacian,
    parse_edge_list,
    reachability_partition,
)
from .generators import GenSpec, directed_cycle, random_balanced_digraph, random_directed_cactus
from .linalg import (
    adjugate,
    cofactor_sum,
    complement_minor,
    determinant,
    inverse,
    is_moore_penrose,
    moore_penrose_laplacian,
)
from .resistance import (
    ResistanceReport,
    analyze,
    anchored_forest_count,
    kappa,
    pair_resistance_sum,
    resistance_matrix,
    two_forest_count,
)

__version__ = "0.1.0"
