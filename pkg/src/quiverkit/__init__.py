"""Toolkit for finite quivers: path counting, the extremal k-path bound with
machine-checked reshaping certificates, hereditary/saturated structure, and
graph algebras (path algebras and Leavitt path algebras) at desk scale.

All values are immutable after construction and every operation is a pure
function, so results are deterministic and safe to share across threads.
"""

from .errors import QuiverError
from .graph import (
    Edge,
    Graph,
    Path,
    build_graph,
    count_paths_bruteforce,
    enumerate_all_finite_paths,
    enumerate_paths,
    has_loop,
    is_connected_undirected,
    is_path,
    longest_path,
    loop_from_permutation,
    sinks,
    subpath,
)
from .matrices import (
    CountMatrix,
    adjacency_matrix,
    count_paths_matrix,
    graph_from_matrix,
    is_nilpotent,
    mat_mul,
    mat_pow,
    matrix_from_rows,
)
from .extremal import (
    ExploreConfig,
    ReshapeStep,
    ReshapeTrace,
    align_and_sort,
    attach_residual,
    balanced_profile,
    brute_force_max,
    canonical_key,
    explore_real_relaxation,
    identify_unrelated,
    maximize_with_trace,
    maximizer_graph,
    merge_front,
    optimal_bound,
    redistribute,
    remove_isolated,
    thick_path_graph,
    verify_trace,
)
from .structure import (
    GraphHom,
    admissible_subgraphs,
    extended_graph,
    hereditary_subsets,
    identity_hom,
    intersection,
    is_admissible_inclusion,
    is_admissible_intersection,
    is_admissible_union,
    is_graph_homomorphism,
    is_hereditary,
    is_saturated,
    saturated_subsets,
    subgraph_from_hereditary,
    union,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
