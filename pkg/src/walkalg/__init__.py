"""Walk algebra on multi digraphs.

Set-matrix walk generation, Boolean reachability, the F/G/H vertex-set
colorings for path/cycle detection, and an exhaustive oracle that
cross-checks them.
"""
from walkalg.coloring import (
    DetectionReport,
    HColoring,
    detect_cycles,
    detect_paths,
    f_arc_coloring,
    f_walk_coloring,
    full_detection,
    g_arc_coloring,
    g_walk_coloring,
    h_cycle_coloring,
    hamiltonian_cycle_decision,
    hamiltonian_path_decision,
)
from walkalg.graph import (
    Arc,
    GraphParseError,
    MultiDigraph,
    SetMatrix,
    builtin_example,
    parse_graph,
    random_graph,
    serialize_graph,
    walk_generator,
)
from walkalg.matrices import BoolMatrix, VSetMatrix
from walkalg.oracle import (
    Counterexample,
    Discrepancy,
    FalsifyConfig,
    OracleGuardError,
    count_hamiltonian_cycles,
    cross_validate,
    enumerate_paths,
    falsify,
    max_clique_bruteforce,
    oracle_cycle_vector,
    oracle_path_matrix,
)
from walkalg.reach import (
    boolean_arc_matrix,
    boolean_matrix_multiply,
    boolean_walk_matrix,
    clique_number_estimate,
    reachability_closure,
    shortest_path_length,
)
from walkalg.walks import (
    CappedSetMatrix,
    CountMatrix,
    count_walks,
    setmatrix_multiply,
    walk_count_bound,
    walk_sets,
)

__version__ = "0.1.0"
