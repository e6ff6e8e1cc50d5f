"""F/G/H vertex-set colorings and the path/cycle verdicts read off them.

F^1 colors an arc i->j (i != j) with V - {v_i}, G^1 with V - {v_j}. Powers
intersect along the walk and union over the middle vertex, with the diagonal
forced empty:

    F^{k+1}[i, j] = U_b F^k[i, b] & F^1[b, j]        (i != j)

H^1 holds the loop arcs; for k >= 2, H^k[i, i] = U_b F^{k-1}[i, b] & G^1[b, i].

A nonempty F^k[i, j] is the method's claim that a simple path of length k runs
from v_i to v_j; a nonempty H^k[i, i] claims a k-cycle through v_i. Only the
forward direction (path => nonempty cell) is guaranteed; see
``walkalg.oracle`` for the ground truth these claims are checked against.
Nothing in this module consults the oracle.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from walkalg import kernels
from walkalg.graph import MultiDigraph, walk_generator
from walkalg.matrices import (
    BoolMatrix,
    VSetMatrix,
    full_set,
    render_grid,
    render_set,
    unpack_set,
    word_count,
)


def _arc_coloring(g: MultiDigraph, by_start: bool) -> VSetMatrix:
    n = g.n
    data = np.zeros((n, n, word_count(n)), dtype=np.uint64)
    everything = full_set(n)
    for i, j in g.arc_pairs():
        if i == j:
            continue
        v = i if by_start else j
        color = everything.copy()
        color[(v - 1) >> 6] &= ~(np.uint64(1) << np.uint64((v - 1) & 63))
        data[i - 1, j - 1] = color
    return VSetMatrix(n, data)


def f_arc_coloring(g: MultiDigraph) -> VSetMatrix:
    return _arc_coloring(g, by_start=True)


def g_arc_coloring(g: MultiDigraph) -> VSetMatrix:
    return _arc_coloring(g, by_start=False)


def vset_step(power: VSetMatrix, arc: VSetMatrix) -> VSetMatrix:
    """One walk-coloring iteration: ``power * arc`` with an empty diagonal."""
    return VSetMatrix(power.n, kernels.vset_product(power.data, arc.data, True))


def _walk_coloring(arc: VSetMatrix, k: int) -> VSetMatrix:
    if k < 1:
        raise ValueError(f"walk length must be >= 1, got {k}")
    power = arc
    for _ in range(k - 1):
        if not power.any():
            break
        power = vset_step(power, arc)
    return power


def f_walk_coloring(g: MultiDigraph, k: int) -> VSetMatrix:
    return _walk_coloring(f_arc_coloring(g), k)


def g_walk_coloring(g: MultiDigraph, k: int) -> VSetMatrix:
    return _walk_coloring(g_arc_coloring(g), k)


@dataclass(frozen=True)
class HColoring:
    """Diagonal H^k. ``loops`` is filled for k == 1 (arc ids), ``cells`` for k >= 2."""

    n: int
    k: int
    loops: tuple[frozenset[str], ...] | None = None
    cells: tuple[frozenset[int], ...] | None = None

    def __post_init__(self) -> None:
        if (self.loops is None) == (self.cells is None):
            raise ValueError("exactly one of loops/cells must be given")

    def diagonal(self) -> tuple[frozenset, ...]:
        return self.loops if self.loops is not None else self.cells

    def cell(self, i: int, j: int) -> frozenset:
        return self.diagonal()[i - 1] if i == j else frozenset()

    def verdicts(self) -> tuple[bool, ...]:
        return tuple(bool(c) for c in self.diagonal())

    def render(self) -> str:
        diag = self.diagonal()
        rows = [
            [render_set(diag[i]) if i == j else "{}" for j in range(self.n)]
            for i in range(self.n)
        ]
        return render_grid(rows)


def _h_from(power: VSetMatrix, closing: VSetMatrix, k: int) -> HColoring:
    diag = kernels.vset_diag_join(power.data, closing.data)
    return HColoring(power.n, k, cells=tuple(unpack_set(diag[i]) for i in range(power.n)))


def h_loops(g: MultiDigraph) -> HColoring:
    s = walk_generator(g)
    return HColoring(g.n, 1, loops=tuple(s.cell(i, i) for i in g.vertices))


def h_cycle_coloring(g: MultiDigraph, k: int, swap: bool = False) -> HColoring:
    """H^k. With ``swap`` the roles of F and G are exchanged (G^{k-1} then F^1)."""
    if k < 1:
        raise ValueError(f"cycle length must be >= 1, got {k}")
    if k == 1:
        return h_loops(g)
    if swap:
        return _h_from(g_walk_coloring(g, k - 1), f_arc_coloring(g), k)
    return _h_from(f_walk_coloring(g, k - 1), g_arc_coloring(g), k)


def detect_paths(g: MultiDigraph, k: int) -> BoolMatrix:
    """Claimed k-path verdicts: nonemptiness of F^k."""
    return f_walk_coloring(g, k).nonempty()


def detect_cycles(g: MultiDigraph, k: int, swap: bool = False) -> tuple[bool, ...]:
    """Claimed k-cycle verdicts per vertex: nonemptiness of H^k[i, i]."""
    return h_cycle_coloring(g, k, swap=swap).verdicts()


def hamiltonian_path_decision(g: MultiDigraph) -> tuple[bool, list[tuple[int, int]]]:
    if g.n < 2:
        raise ValueError("Hamiltonian path decision needs n >= 2")
    pairs = detect_paths(g, g.n - 1).pairs()
    return bool(pairs), pairs


def hamiltonian_cycle_decision(g: MultiDigraph, swap: bool = False) -> tuple[bool, list[int]]:
    """Claimed Hamiltonian-cycle verdict using only row 1 of F^{n-1}.

    Returns the verdict and the vertices in H^n[1, 1] (the closing-arc
    witnesses). A loop is the Hamiltonian cycle of a one-vertex graph.
    """
    n = g.n
    if n == 1:
        found = bool(h_loops(g).loops[0])
        return found, [1] if found else []
    if swap:
        arc, closing = g_arc_coloring(g), f_arc_coloring(g)
    else:
        arc, closing = f_arc_coloring(g), g_arc_coloring(g)
    row = arc.data[0]
    for _ in range(n - 2):
        if not row.any():
            break
        row = kernels.vset_row_product(row, arc.data, 0)
    # H^n[1, 1] = U_b row[b] & closing[b, 1]
    joined = np.bitwise_or.reduce(row & closing.data[:, 0, :], axis=0)
    witnesses = sorted(unpack_set(joined))
    return bool(witnesses), witnesses


@dataclass
class DetectionReport:
    n: int
    paths: dict[int, BoolMatrix] = field(default_factory=dict)
    cycles: dict[int, tuple[bool, ...]] = field(default_factory=dict)

    @property
    def hamiltonian_path(self) -> bool:
        return self.n >= 2 and self.paths[self.n - 1].any()

    @property
    def hamiltonian_cycle(self) -> bool:
        return any(self.cycles[self.n])

    def path_pairs(self, k: int) -> list[tuple[int, int]]:
        return self.paths[k].pairs()

    def cycle_vertices(self, k: int) -> list[int]:
        return [i + 1 for i, hit in enumerate(self.cycles[k]) if hit]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "paths": {str(k): [list(p) for p in m.pairs()] for k, m in sorted(self.paths.items())},
            "cycles": {str(k): self.cycle_vertices(k) for k in sorted(self.cycles)},
            "hamiltonian_path": self.hamiltonian_path,
            "hamiltonian_cycle": self.hamiltonian_cycle,
        }


def full_detection(g: MultiDigraph, keep_matrices: bool = False):
    """All path verdicts for k = 1..n-1 and cycle verdicts for k = 1..n.

    F^k is advanced in place of F^{k-1}; only the current and previous powers
    are alive at any time. With ``keep_matrices`` the F and H colorings are
    also returned, as ``(report, {k: F^k}, {k: H^k})``.
    """
    n = g.n
    report = DetectionReport(n)
    f1, g1 = f_arc_coloring(g), g_arc_coloring(g)
    fk_hist: dict[int, VSetMatrix] = {}
    hk_hist: dict[int, HColoring] = {}

    h1 = h_loops(g)
    report.cycles[1] = h1.verdicts()
    hk_hist[1] = h1
    prev = f1
    for k in range(1, n + 1):
        if k > 1:
            diag = kernels.vset_diag_join(prev.data, g1.data)
            report.cycles[k] = tuple(diag.any(axis=1).tolist())
            if keep_matrices:
                hk_hist[k] = HColoring(n, k, cells=tuple(unpack_set(d) for d in diag))
        if k <= n - 1:
            current = prev if k == 1 else vset_step(prev, f1)
            report.paths[k] = current.nonempty()
            if keep_matrices:
                fk_hist[k] = current
            prev = current
    if keep_matrices:
        return report, fk_hist, hk_hist
    return report
