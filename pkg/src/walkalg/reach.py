"""Monochromatic (true/false) walk coloring: reachability, hop distance, clique iteration."""
from __future__ import annotations

import numpy as np

from walkalg import kernels
from walkalg.graph import MultiDigraph
from walkalg.matrices import BoolMatrix, word_count


def boolean_arc_matrix(g: MultiDigraph) -> BoolMatrix:
    """Cell (i, j) is true iff some arc runs from v_i to v_j."""
    return BoolMatrix.from_pairs(g.n, g.arc_pairs())


def boolean_matrix_multiply(X: BoolMatrix, Y: BoolMatrix) -> BoolMatrix:
    if X.n != Y.n:
        raise ValueError(f"dimension mismatch: {X.n} vs {Y.n}")
    return BoolMatrix(X.n, kernels.bool_product(X.rows, Y.rows))


def boolean_walk_matrix(g: MultiDigraph, k: int) -> BoolMatrix:
    """Cell (i, j) is true iff a walk of exactly ``k`` arcs runs from v_i to v_j."""
    if k < 1:
        raise ValueError(f"walk length must be >= 1, got {k}")
    b1 = boolean_arc_matrix(g)
    power = b1
    for _ in range(k - 1):
        power = boolean_matrix_multiply(power, b1)
    return power


def reachability_closure(g: MultiDigraph) -> BoolMatrix:
    """OR of B^1..B^n: cell (i, j) true iff a walk of length >= 1 joins them."""
    b1 = boolean_arc_matrix(g)
    power = closure = b1
    for _ in range(g.n - 1):
        power = boolean_matrix_multiply(power, b1)
        if not power.any():
            break
        closure = closure | power
    return closure


def shortest_path_length(
    g: MultiDigraph, i0: int, j0: int, allow_zero: bool = False
) -> int | None:
    """Fewest arcs on a walk from v_i0 to v_j0, or None when unreachable.

    Only row ``i0`` of each power is kept and advanced by one Boolean
    row-times-matrix product per step. With ``i0 == j0`` the search is for the
    shortest circuit through v_i0 unless ``allow_zero`` is set.
    """
    n = g.n
    for v in (i0, j0):
        if not 1 <= v <= n:
            raise ValueError(f"vertex {v} out of range 1..{n}")
    if i0 == j0 and allow_zero:
        return 0
    b1 = boolean_arc_matrix(g).rows
    word, bit = (j0 - 1) >> 6, np.uint64(1) << np.uint64((j0 - 1) & 63)
    row = b1[i0 - 1].copy()
    limit = n if i0 == j0 else n - 1
    for k in range(1, limit + 1):
        if row[word] & bit:
            return k
        if not row.any():
            return None
        row = kernels.bool_row_product(row, b1)
    return None


class CliqueIterationError(RuntimeError):
    pass


def clique_q_matrix(g: MultiDigraph) -> BoolMatrix:
    """Strictly lower-triangular mask of bidirectionally joined pairs."""
    pairs = g.arc_pairs()
    return BoolMatrix.from_pairs(g.n, ((i, j) for i, j in pairs if i > j and (j, i) in pairs))


def clique_iterates(g: MultiDigraph) -> list[BoolMatrix]:
    """Q^1, Q^2, ... up to and including the first all-false iterate."""
    q = clique_q_matrix(g)
    seq = [q]
    while seq[-1].any():
        if len(seq) >= g.n:
            raise CliqueIterationError(f"Q-iteration not all-false after {g.n} steps")
        cur = seq[-1]
        seq.append(boolean_matrix_multiply(cur, q) & cur)
    return seq


def clique_number_estimate(g: MultiDigraph) -> int:
    """Smallest m with Q^m all-false.

    This is the claimed clique number of the Q-iteration. It is not known to be
    exact; ``walkalg.oracle.max_clique_bruteforce`` is the ground truth.
    """
    return len(clique_iterates(g))
