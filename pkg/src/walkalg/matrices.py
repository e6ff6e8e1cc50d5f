"""Packed Boolean and vertex-set matrices."""
from __future__ import annotations

from typing import Iterable

import numpy as np


def word_count(n: int) -> int:
    return max(1, (n + 63) // 64)


def pack_set(vertices: Iterable[int], n: int) -> np.ndarray:
    """Pack 1-based vertex indices into a uint64 word vector."""
    out = np.zeros(word_count(n), dtype=np.uint64)
    for v in vertices:
        if not 1 <= v <= n:
            raise ValueError(f"vertex {v} out of range 1..{n}")
        out[(v - 1) >> 6] |= np.uint64(1) << np.uint64((v - 1) & 63)
    return out


def pack_rows(mask: np.ndarray) -> np.ndarray:
    """Pack a 2-D bool array ``(rows, n)`` into ``(rows, W)`` uint64 words."""
    rows, n = mask.shape
    padded = np.zeros((rows, word_count(n) * 64), dtype=bool)
    padded[:, :n] = mask
    return np.packbits(padded, axis=1, bitorder="little").view("<u8").astype(np.uint64)


def unpack_rows(words: np.ndarray, n: int) -> np.ndarray:
    """Inverse of ``pack_rows`` on the last axis."""
    as_bytes = np.ascontiguousarray(words, dtype="<u8").view(np.uint8)
    return np.unpackbits(as_bytes, axis=-1, bitorder="little")[..., :n].astype(bool)


def unpack_set(words: np.ndarray) -> frozenset[int]:
    found = []
    for w, word in enumerate(words.tolist()):
        base = 64 * w + 1
        while word:
            low = word & -word
            found.append(base + low.bit_length() - 1)
            word ^= low
    return frozenset(found)


def full_set(n: int) -> np.ndarray:
    return pack_set(range(1, n + 1), n)


def render_set(items: Iterable) -> str:
    return "{" + ",".join(str(x) for x in sorted(items)) + "}"


def render_grid(rows: list[list[str]]) -> str:
    width = max((len(c) for r in rows for c in r), default=0)
    return "\n".join(" ".join(c.ljust(width) for c in r).rstrip() for r in rows)


class BoolMatrix:
    """n x n truth values, one packed bit row per vertex."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: np.ndarray) -> None:
        rows = np.ascontiguousarray(rows, dtype=np.uint64)
        if rows.shape != (n, word_count(n)):
            raise ValueError(f"expected shape {(n, word_count(n))}, got {rows.shape}")
        self.n = n
        self.rows = rows
        self.rows.flags.writeable = False

    @classmethod
    def zeros(cls, n: int) -> BoolMatrix:
        return cls(n, np.zeros((n, word_count(n)), dtype=np.uint64))

    @classmethod
    def identity(cls, n: int) -> BoolMatrix:
        return cls.from_pairs(n, ((i, i) for i in range(1, n + 1)))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> BoolMatrix:
        rows = np.zeros((n, word_count(n)), dtype=np.uint64)
        for i, j in pairs:
            rows[i - 1, (j - 1) >> 6] |= np.uint64(1) << np.uint64((j - 1) & 63)
        return cls(n, rows)

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> BoolMatrix:
        mask = np.asarray(mask, dtype=bool)
        return cls(mask.shape[0], pack_rows(mask))

    @classmethod
    def from_lists(cls, cells: list[list[bool]]) -> BoolMatrix:
        return cls.from_mask(np.array(cells, dtype=bool).reshape(len(cells), len(cells)))

    def to_mask(self) -> np.ndarray:
        return unpack_rows(self.rows, self.n)

    def __getitem__(self, ij: tuple[int, int]) -> bool:
        i, j = ij
        return bool((int(self.rows[i - 1, (j - 1) >> 6]) >> ((j - 1) & 63)) & 1)

    def row_set(self, i: int) -> frozenset[int]:
        return unpack_set(self.rows[i - 1])

    def pairs(self) -> list[tuple[int, int]]:
        return [(int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(self.to_mask()))]

    def to_lists(self) -> list[list[bool]]:
        return self.to_mask().tolist()

    def any(self) -> bool:
        return bool(self.rows.any())

    def __and__(self, other: BoolMatrix) -> BoolMatrix:
        return BoolMatrix(self.n, self.rows & other.rows)

    def __or__(self, other: BoolMatrix) -> BoolMatrix:
        return BoolMatrix(self.n, self.rows | other.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BoolMatrix):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.rows, other.rows)

    def __hash__(self) -> int:
        return hash((self.n, self.rows.tobytes()))

    def render(self) -> str:
        return "\n".join(" ".join("1" if v else "0" for v in row) for row in self.to_lists())

    def __repr__(self) -> str:
        return f"BoolMatrix(n={self.n}, pairs={self.pairs()})"


class VSetMatrix:
    """n x n matrix whose cells are vertex subsets, packed as ``(n, n, W)`` words."""

    __slots__ = ("n", "data")

    def __init__(self, n: int, data: np.ndarray) -> None:
        data = np.ascontiguousarray(data, dtype=np.uint64)
        if data.shape != (n, n, word_count(n)):
            raise ValueError(f"expected shape {(n, n, word_count(n))}, got {data.shape}")
        self.n = n
        self.data = data
        self.data.flags.writeable = False

    @classmethod
    def zeros(cls, n: int) -> VSetMatrix:
        return cls(n, np.zeros((n, n, word_count(n)), dtype=np.uint64))

    @classmethod
    def from_cells(cls, cells: dict[tuple[int, int], Iterable[int]], n: int) -> VSetMatrix:
        data = np.zeros((n, n, word_count(n)), dtype=np.uint64)
        for (i, j), vs in cells.items():
            data[i - 1, j - 1] = pack_set(vs, n)
        return cls(n, data)

    def cell(self, i: int, j: int) -> frozenset[int]:
        return unpack_set(self.data[i - 1, j - 1])

    def cells(self) -> dict[tuple[int, int], frozenset[int]]:
        """Nonempty cells only."""
        out = {}
        for i, j in zip(*np.nonzero(self.data.any(axis=2))):
            out[(int(i) + 1, int(j) + 1)] = unpack_set(self.data[i, j])
        return out

    def nonempty(self) -> BoolMatrix:
        return BoolMatrix.from_mask(self.data.any(axis=2))

    def any(self) -> bool:
        return bool(self.data.any())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VSetMatrix):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.data, other.data)

    def __hash__(self) -> int:
        return hash((self.n, self.data.tobytes()))

    def render(self) -> str:
        rows = [[render_set(self.cell(i, j)) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]
        return render_grid(rows)

    def __repr__(self) -> str:
        return f"VSetMatrix(n={self.n}, cells={self.cells()})"
