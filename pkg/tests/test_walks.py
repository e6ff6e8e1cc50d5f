import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from walkalg import (
    CappedSetMatrix,
    MultiDigraph,
    builtin_example,
    count_walks,
    setmatrix_multiply,
    walk_count_bound,
    walk_generator,
    walk_sets,
)
from walkalg.graph import SetMatrix
from walkalg.walks import is_walk

from conftest import digraphs


def brute_walks(g, k):
    """Bucket every arc-consecutive k-sequence by (start, finish)."""
    buckets = {}
    for seq in itertools.product(g.arcs, repeat=k):
        if all(a.dst == b.src for a, b in zip(seq, seq[1:])):
            buckets.setdefault((seq[0].src, seq[-1].dst), set()).add(tuple(a.id for a in seq))
    return buckets


def cells_of(m):
    return {(i, j): set(m.cell(i, j)) for i in range(1, m.n + 1) for j in range(1, m.n + 1) if m.cell(i, j)}


def test_dion_square_matches_worked_example(dion):
    s = walk_generator(dion)
    sq = setmatrix_multiply(s, s, cap=2)
    assert sq.cell(1, 1) == {("a11", "a11"), ("a12", "a21")}
    assert sq.cell(1, 2) == {("a11", "a12"), ("a12", "a22")}
    assert sq.cell(2, 1) == {("a21", "a11"), ("a22", "a21")}
    assert sq.cell(2, 2) == {("a21", "a12"), ("a22", "a22")}
    assert not sq.any_overflow


def test_empty_operand_annihilates(dion):
    zero = CappedSetMatrix.exact(SetMatrix.empty(2))
    out = setmatrix_multiply(zero, walk_generator(dion), cap=3)
    assert not cells_of(out) and not out.any_overflow


def test_dion_cube_cap4(dion):
    cube = walk_sets(dion, 3, cap=4)
    assert brute_walks(dion, 3) == cells_of(cube)
    assert all(len(cube.cell(i, j)) == 4 for i in (1, 2) for j in (1, 2))
    assert not cube.any_overflow


def test_truncation_is_lexicographic_and_flagged(dion):
    cube = walk_sets(dion, 3, cap=3)
    full = brute_walks(dion, 3)
    for (i, j), ws in full.items():
        assert cube.cell(i, j) == set(sorted(ws)[:3])
        assert cube.overflowed(i, j)


def test_overflow_propagates(dion):
    # a truncated square feeds an incomplete cube even when the cube cells fit
    sq = walk_sets(dion, 2, cap=1)
    cube = setmatrix_multiply(sq, walk_generator(dion), cap=100)
    assert all(cube.overflowed(i, j) for i in (1, 2) for j in (1, 2))


def test_dimension_mismatch(dion, dion_ext):
    with pytest.raises(ValueError):
        setmatrix_multiply(walk_generator(dion), walk_generator(dion_ext))


def test_walk_sets_dion_square(dion):
    sq = walk_sets(dion, 2, cap=10)
    assert all(len(sq.cell(i, j)) == 2 for i in (1, 2) for j in (1, 2))


def test_walk_sets_dion_extended(dion_ext):
    sq = walk_sets(dion_ext, 2, cap=10)
    assert ("a12", "a23") in sq.cell(1, 3)
    assert {("a11", "a11"), ("a12", "a21")} <= sq.cell(1, 1)
    assert cells_of(sq) == brute_walks(dion_ext, 2)


@pytest.mark.parametrize("k", [1, 2, 5])
def test_walk_sets_no_arcs(k):
    assert not cells_of(walk_sets(MultiDigraph(3), k))


def test_count_walks_dion_law(dion):
    for k in range(1, 21):
        assert count_walks(dion, k).total() == 2 ** (k + 1)


def test_count_walks_examples(dion_ext):
    assert count_walks(MultiDigraph(3), 1).total() == 0
    assert count_walks(dion_ext, 2).cell(1, 3) == 1


def test_count_walks_arbitrary_precision(dion):
    assert count_walks(dion, 200).total() == 2**201


def test_walk_count_bound_examples(dion):
    assert walk_count_bound(dion, 3) == 4
    assert walk_count_bound(dion, 1) == 1
    assert walk_count_bound(MultiDigraph(4), 5) == 0
    counts = count_walks(dion, 3)
    assert all(counts.cell(i, j) <= 4 for i in (1, 2) for j in (1, 2))


@pytest.mark.parametrize("fn", [walk_sets, count_walks, walk_count_bound])
def test_length_precondition(fn, dion):
    with pytest.raises(ValueError):
        fn(dion, 0)


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=4, parallel=True), st.integers(1, 4))
def test_walk_sets_match_enumeration(g, k):
    assert cells_of(walk_sets(g, k)) == brute_walks(g, k)


@settings(max_examples=60, deadline=None)
@given(digraphs(max_n=5, parallel=True), st.integers(1, 5))
def test_cardinality_and_bound(g, k):
    counts = count_walks(g, k)
    bound = walk_count_bound(g, k)
    if counts.total() <= 10_000:
        ws = walk_sets(g, k)
        for i in g.vertices:
            for j in g.vertices:
                assert len(ws.cell(i, j)) == counts.cell(i, j)
                for w in ws.cell(i, j):
                    assert len(w) == k and is_walk(g, w)
    assert all(c <= bound for row in counts.cells for c in row)


@settings(max_examples=40, deadline=None)
@given(digraphs(max_n=4, parallel=True), st.integers(1, 3), st.integers(1, 3))
def test_semiring_associativity(g, k1, k2):
    left = walk_sets(g, k1)
    right = walk_sets(g, k2)
    assert cells_of(setmatrix_multiply(left, right)) == cells_of(walk_sets(g, k1 + k2))
