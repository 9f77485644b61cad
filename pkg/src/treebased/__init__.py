"""Tree-based phylogenetic networks via maximal zig-zag trail decomposition."""
from .core import (ALMOST_BINARY, BINARY, Arc, Network, VertexKind, build_network,
                   classify_vertex, degrees)
from .decompose import (CROWN, KINDS, M_FENCE, N_FENCE, W_FENCE, Decomposition, Trail,
                        classify_trail, decompose, trail_of_arc)
from .trails import (MAX, MIN, admissible_by_index, best_choice, family_size,
                     is_admissible_local, selected_positions)
from .analysis import (DeviationReport, EnumerationCursor, PathPartition, SubdivisionTree,
                       count, deviation, enumerate_k, enumerate_trees, find_subdivision_tree,
                       is_admissible_global, is_tree_based, open_cursor, optimize,
                       path_partition_from_tree, sample_uniform, verify_subdivision_tree)
from .oracle import (BipartiteGraph, Matching, brute_force_admissible_sets, build_bipartite,
                     deviation_via_matching, max_matching, maximum_matching)
from .generator import attach_leaf, gadget_with_profile, random_network
from .io import export_dot, parse_edge_list, parse_enewick, write_edge_list
from .errors import *  # noqa: F401,F403

__version__ = "0.1.0"
