"""Set-matrix powers of the walk generator, and walk counting.

A walk is a tuple of arc ids. Multiplying set matrices concatenates walks
(Cartesian product) and unions over the shared middle vertex. Cell sizes grow
exponentially, so products are capped per cell with a deterministic
lexicographic truncation and an overflow flag.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from walkalg.graph import MultiDigraph, SetMatrix, walk_generator

Walk = tuple[str, ...]


@dataclass(frozen=True)
class CappedSetMatrix:
    base: SetMatrix
    overflow: tuple[tuple[bool, ...], ...]

    @property
    def n(self) -> int:
        return self.base.n

    def cell(self, i: int, j: int) -> frozenset:
        return self.base.cell(i, j)

    def overflowed(self, i: int, j: int) -> bool:
        return self.overflow[i - 1][j - 1]

    @property
    def any_overflow(self) -> bool:
        return any(any(row) for row in self.overflow)

    @classmethod
    def exact(cls, m: SetMatrix) -> CappedSetMatrix:
        """Wrap ``m``, lifting bare arc ids to one-arc walks."""
        cells = tuple(tuple(frozenset(_as_walk(t) for t in c) for c in row) for row in m.cells)
        flags = tuple((False,) * m.n for _ in range(m.n))
        return cls(SetMatrix(m.n, cells), flags)


def _as_walk(token) -> Walk:
    return (token,) if isinstance(token, str) else tuple(token)


def _overflow_of(m) -> tuple[tuple[bool, ...], ...]:
    if isinstance(m, CappedSetMatrix):
        return m.overflow
    return tuple((False,) * m.n for _ in range(m.n))


def _base(m) -> SetMatrix:
    return m.base if isinstance(m, CappedSetMatrix) else m


def setmatrix_multiply(X, Y, cap: int | None = None) -> CappedSetMatrix:
    """Product of set matrices with concatenation in place of multiplication.

    Either operand may be a plain ``SetMatrix`` or a ``CappedSetMatrix``. A
    result cell is flagged when it was truncated to ``cap`` or when it draws on
    an operand cell that was itself flagged, i.e. whenever it may be missing
    walks. ``cap=None`` means no limit.
    """
    if X.n != Y.n:
        raise ValueError(f"dimension mismatch: {X.n} vs {Y.n}")
    if cap is not None and cap < 0:
        raise ValueError("cap must be non-negative")
    n = X.n
    xb, yb = _base(X), _base(Y)
    xo, yo = _overflow_of(X), _overflow_of(Y)
    cells = []
    flags = []
    for i in range(n):
        row_cells = []
        row_flags = []
        for j in range(n):
            acc: set[Walk] = set()
            lossy = False
            for b in range(n):
                left = xb.cells[i][b]
                right = yb.cells[b][j]
                if not left and not xo[i][b]:
                    continue
                if not right and not yo[b][j]:
                    continue
                if xo[i][b] or yo[b][j]:
                    lossy = True
                for x in left:
                    xw = _as_walk(x)
                    for y in right:
                        acc.add(xw + _as_walk(y))
            if cap is not None and len(acc) > cap:
                acc = set(sorted(acc)[:cap])
                lossy = True
            row_cells.append(frozenset(acc))
            row_flags.append(lossy)
        cells.append(tuple(row_cells))
        flags.append(tuple(row_flags))
    return CappedSetMatrix(SetMatrix(n, tuple(cells)), tuple(flags))


def walk_sets(g: MultiDigraph, k: int, cap: int | None = None) -> CappedSetMatrix:
    """Cell (i, j) holds the length-``k`` walks from v_i to v_j, written in arcs."""
    if k < 1:
        raise ValueError(f"walk length must be >= 1, got {k}")
    s = walk_generator(g)
    power = CappedSetMatrix.exact(s)
    for _ in range(k - 1):
        power = setmatrix_multiply(power, s, cap)
    if cap is not None and k == 1:
        power = _truncate(power, cap)
    return power


def _truncate(m: CappedSetMatrix, cap: int) -> CappedSetMatrix:
    cells, flags = [], []
    for row, frow in zip(m.base.cells, m.overflow):
        cells.append(tuple(frozenset(sorted(c)[:cap]) for c in row))
        flags.append(tuple(f or len(c) > cap for c, f in zip(row, frow)))
    return CappedSetMatrix(SetMatrix(m.n, tuple(cells)), tuple(flags))


def is_walk(g: MultiDigraph, walk: Iterable[str]) -> bool:
    """True if consecutive arcs share the intermediate vertex."""
    by_id = {a.id: a for a in g.arcs}
    arcs = [by_id.get(t) for t in walk]
    if not arcs or any(a is None for a in arcs):
        return False
    return all(a.dst == b.src for a, b in zip(arcs, arcs[1:]))


def walk_vertices(g: MultiDigraph, walk: Iterable[str]) -> list[int]:
    by_id = {a.id: a for a in g.arcs}
    arcs = [by_id[t] for t in walk]
    return [arcs[0].src] + [a.dst for a in arcs]


@dataclass(frozen=True)
class CountMatrix:
    n: int
    cells: tuple[tuple[int, ...], ...]

    def cell(self, i: int, j: int) -> int:
        return self.cells[i - 1][j - 1]

    def total(self) -> int:
        return sum(sum(row) for row in self.cells)


def _int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def count_walks(g: MultiDigraph, k: int) -> CountMatrix:
    """k-th power of the multiplicity adjacency matrix, in exact integers."""
    if k < 1:
        raise ValueError(f"walk length must be >= 1, got {k}")
    adj = g.multiplicity()
    result = adj
    # square-and-multiply; Python ints never overflow
    base, e, acc = adj, k - 1, None
    while e:
        if e & 1:
            acc = base if acc is None else _int_matmul(acc, base)
        e >>= 1
        if e:
            base = _int_matmul(base, base)
    if acc is not None:
        result = _int_matmul(adj, acc)
    return CountMatrix(g.n, tuple(tuple(r) for r in result))


def walk_count_bound(g: MultiDigraph, k: int) -> int:
    """Per-pair upper bound ``n**(k-1) * (max cell multiplicity)**k``."""
    if k < 1:
        raise ValueError(f"walk length must be >= 1, got {k}")
    widest = max((c for row in g.multiplicity() for c in row), default=0)
    return g.n ** (k - 1) * widest**k
