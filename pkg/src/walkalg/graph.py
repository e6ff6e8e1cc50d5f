"""Multi digraphs, the edge-list text format, built-in fixtures and random graphs.

Vertices are dense 1-based indices. Arcs carry a string label that is unique
within a graph; parallel arcs and loops are allowed.

Text format (UTF-8, one record per line)::

    # comment
    n 4
    a 1 2          # label defaults to a12_1
    a 2 3 a23
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple


class GraphParseError(ValueError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class Arc(NamedTuple):
    id: str
    src: int
    dst: int


@dataclass(frozen=True)
class MultiDigraph:
    n: int
    arcs: tuple[Arc, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"vertex count must be >= 1, got {self.n}")
        seen: set[str] = set()
        for arc in self.arcs:
            if not (1 <= arc.src <= self.n and 1 <= arc.dst <= self.n):
                raise ValueError(f"arc {arc.id!r} endpoint out of range 1..{self.n}")
            if arc.id in seen:
                raise ValueError(f"duplicate arc id {arc.id!r}")
            seen.add(arc.id)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> MultiDigraph:
        """Build a graph from (from, to) pairs with auto-assigned labels."""
        builder = _ArcBuilder()
        for src, dst in pairs:
            builder.add(src, dst)
        return cls(n, tuple(builder.arcs))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def successors(self, v: int) -> list[int]:
        return sorted({a.dst for a in self.arcs if a.src == v})

    def arc_pairs(self) -> set[tuple[int, int]]:
        return {(a.src, a.dst) for a in self.arcs}

    def multiplicity(self) -> list[list[int]]:
        """Row-major 0-based matrix of arc counts."""
        m = [[0] * self.n for _ in range(self.n)]
        for a in self.arcs:
            m[a.src - 1][a.dst - 1] += 1
        return m


class _ArcBuilder:
    def __init__(self) -> None:
        self.arcs: list[Arc] = []
        self.ids: set[str] = set()
        self._ordinal: dict[tuple[int, int], int] = {}

    def auto_id(self, src: int, dst: int) -> str:
        # ids like a112_1 can come from (1,12) and (11,2); bump until free
        ordinal = self._ordinal.get((src, dst), 0)
        while True:
            ordinal += 1
            label = f"a{src}{dst}_{ordinal}"
            if label not in self.ids:
                self._ordinal[(src, dst)] = ordinal
                return label

    def add(self, src: int, dst: int, label: str | None = None) -> Arc:
        if label is None:
            label = self.auto_id(src, dst)
        arc = Arc(label, src, dst)
        self.arcs.append(arc)
        self.ids.add(label)
        return arc


def parse_graph(text: str) -> MultiDigraph:
    """Parse the edge-list format. Raises GraphParseError naming the line."""
    n: int | None = None
    builder = _ArcBuilder()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "n":
            if n is not None:
                raise GraphParseError(lineno, "vertex count given twice")
            if len(fields) != 2:
                raise GraphParseError(lineno, "expected 'n <count>'")
            n = _parse_int(fields[1], lineno)
            if n < 1:
                raise GraphParseError(lineno, f"vertex count must be >= 1, got {n}")
        elif tag == "a":
            if n is None:
                raise GraphParseError(lineno, "arc before 'n <count>'")
            if len(fields) not in (3, 4):
                raise GraphParseError(lineno, "expected 'a <from> <to> [<id>]'")
            src = _parse_int(fields[1], lineno)
            dst = _parse_int(fields[2], lineno)
            for v in (src, dst):
                if not 1 <= v <= n:
                    raise GraphParseError(lineno, f"vertex {v} out of range 1..{n}")
            label = fields[3] if len(fields) == 4 else None
            if label is not None and label in builder.ids:
                raise GraphParseError(lineno, f"duplicate arc id {label!r}")
            builder.add(src, dst, label)
        else:
            raise GraphParseError(lineno, f"unknown record {tag!r}")
    if n is None:
        raise GraphParseError(0, "missing 'n <count>' record")
    return MultiDigraph(n, tuple(builder.arcs))


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(lineno, f"expected an integer, got {token!r}") from None


def serialize_graph(g: MultiDigraph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"a {a.src} {a.dst} {a.id}" for a in g.arcs)
    return "\n".join(lines) + "\n"


_FIXTURES = {
    "dion": "n 2\na 1 1 a11\na 1 2 a12\na 2 1 a21\na 2 2 a22\n",
    "dion-extended": "n 4\na 1 1 a11\na 1 2 a12\na 2 1 a21\na 2 2 a22\na 2 3 a23\n",
    # F^4 cell (1,4) is nonempty although no path of length 4 exists
    "counterexample-n4": "n 4\na 1 2\na 2 3\na 3 2\na 2 4\n",
}


def fixture_names() -> list[str]:
    return sorted(_FIXTURES)


def builtin_example(name: str) -> MultiDigraph:
    try:
        text = _FIXTURES[name]
    except KeyError:
        raise KeyError(
            f"unknown fixture {name!r}; available: {', '.join(fixture_names())}"
        ) from None
    return parse_graph(text)


def random_graph(n: int, arc_prob: float, loops: bool = False, seed: int = 0) -> MultiDigraph:
    """Bernoulli digraph: each ordered pair gets one arc with probability ``arc_prob``.

    Pairs are visited row-major and each consumes exactly one draw from
    ``random.Random(seed)``, so a given argument tuple always yields the
    same graph.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 <= arc_prob <= 1.0:
        raise ValueError(f"arc_prob must lie in [0, 1], got {arc_prob}")
    rng = random.Random(seed)
    pairs = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j and not loops:
                continue
            if rng.random() < arc_prob:
                pairs.append((i, j))
    return MultiDigraph.from_pairs(n, pairs)


@dataclass(frozen=True)
class SetMatrix:
    """n x n matrix of finite token sets (arc ids, or walks as arc-id tuples)."""

    n: int
    cells: tuple[tuple[frozenset, ...], ...]

    @classmethod
    def empty(cls, n: int) -> SetMatrix:
        row = tuple(frozenset() for _ in range(n))
        return cls(n, tuple(row for _ in range(n)))

    def cell(self, i: int, j: int) -> frozenset:
        """Cell at 1-based (i, j)."""
        return self.cells[i - 1][j - 1]


def walk_generator(g: MultiDigraph) -> SetMatrix:
    cells = [[set() for _ in range(g.n)] for _ in range(g.n)]
    for a in g.arcs:
        cells[a.src - 1][a.dst - 1].add(a.id)
    return SetMatrix(g.n, tuple(tuple(frozenset(c) for c in row) for row in cells))
