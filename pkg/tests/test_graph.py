import pytest
from hypothesis import given

from walkalg import (
    GraphParseError,
    MultiDigraph,
    builtin_example,
    parse_graph,
    random_graph,
    serialize_graph,
    walk_generator,
)
from walkalg.graph import Arc

from conftest import digraphs


def test_parse_dion():
    g = parse_graph("n 2\na 1 1 a11\na 1 2 a12\na 2 1 a21\na 2 2 a22")
    assert g.n == 2
    assert [a.id for a in g.arcs] == ["a11", "a12", "a21", "a22"]
    assert g == builtin_example("dion")


def test_parse_single_vertex():
    g = parse_graph("n 1")
    assert g.n == 1 and g.arcs == ()


def test_parse_auto_ids_and_comments():
    g = parse_graph("# four vertices\nn 4\na 1 2\na 2 3   # tail comment\na 3 2\na 2 4\n\na 1 2\n")
    assert [a.id for a in g.arcs] == ["a12_1", "a23_1", "a32_1", "a24_1", "a12_2"]
    assert [(a.src, a.dst) for a in g.arcs] == [(1, 2), (2, 3), (3, 2), (2, 4), (1, 2)]


def test_auto_ids_never_collide():
    # (1,12) and (11,2) both spell a112
    g = MultiDigraph.from_pairs(12, [(1, 12), (11, 2)])
    assert len({a.id for a in g.arcs}) == 2


@pytest.mark.parametrize(
    "text, lineno",
    [
        ("n 2\na 1 3", 2),
        ("n 2\na 0 1", 2),
        ("n 2\na 1 2 x\na 2 1 x", 3),
        ("n 2\nq 1 2", 2),
        ("n 2\na 1", 2),
        ("a 1 2\nn 2", 1),
        ("n two", 1),
        ("n 2\nn 3", 2),
        ("n 0", 1),
    ],
)
def test_parse_errors_name_line(text, lineno):
    with pytest.raises(GraphParseError) as info:
        parse_graph(text)
    assert info.value.lineno == lineno
    assert f"line {lineno}" in str(info.value)


def test_parse_missing_header():
    with pytest.raises(GraphParseError):
        parse_graph("# nothing\n")


def test_model_invariants():
    with pytest.raises(ValueError):
        MultiDigraph(2, (Arc("x", 1, 3),))
    with pytest.raises(ValueError):
        MultiDigraph(2, (Arc("x", 1, 2), Arc("x", 2, 1)))
    # loops and parallel arcs are fine
    MultiDigraph(2, (Arc("x", 1, 1), Arc("y", 1, 2), Arc("z", 1, 2)))


def test_fixtures():
    dion = builtin_example("dion")
    assert dion.n == 2 and {a.id for a in dion.arcs} == {"a11", "a12", "a21", "a22"}
    ext = builtin_example("dion-extended")
    assert ext.n == 4 and {a.id for a in ext.arcs} == {"a11", "a12", "a21", "a22", "a23"}
    assert not any(4 in (a.src, a.dst) for a in ext.arcs)
    cx = builtin_example("counterexample-n4")
    assert cx.n == 4 and [(a.src, a.dst) for a in cx.arcs] == [(1, 2), (2, 3), (3, 2), (2, 4)]


def test_unknown_fixture_lists_names():
    with pytest.raises(KeyError, match="counterexample-n4"):
        builtin_example("petersen")


def test_random_graph_extremes():
    assert random_graph(5, 0.0, seed=7).arcs == ()
    full = random_graph(3, 1.0, loops=False, seed=7)
    assert sorted((a.src, a.dst) for a in full.arcs) == [(i, j) for i in (1, 2, 3) for j in (1, 2, 3) if i != j]
    assert len(random_graph(3, 1.0, loops=True, seed=7).arcs) == 9


def test_random_graph_deterministic():
    a = random_graph(6, 0.4, seed=42)
    b = random_graph(6, 0.4, seed=42)
    assert a == b
    assert a != random_graph(6, 0.4, seed=43)


def test_random_graph_frozen():
    # regression: pins the generator so reruns elsewhere build the same graph
    g = random_graph(6, 0.4, seed=42)
    assert serialize_graph(g) == (
        "n 6\na 1 3 a13_1\na 1 4 a14_1\na 1 5 a15_1\na 2 4 a24_1\na 2 6 a26_1\n"
        "a 3 1 a31_1\na 3 4 a34_1\na 3 5 a35_1\na 4 2 a42_1\na 4 6 a46_1\n"
        "a 5 3 a53_1\na 5 4 a54_1\na 6 1 a61_1\na 6 2 a62_1\na 6 3 a63_1\n"
    )


def test_random_graph_preconditions():
    with pytest.raises(ValueError):
        random_graph(0, 0.5)
    with pytest.raises(ValueError):
        random_graph(3, 1.5)


def test_walk_generator_dion():
    s = walk_generator(builtin_example("dion"))
    assert [[s.cell(i, j) for j in (1, 2)] for i in (1, 2)] == [
        [{"a11"}, {"a12"}],
        [{"a21"}, {"a22"}],
    ]


def test_walk_generator_dion_extended():
    s = walk_generator(builtin_example("dion-extended"))
    assert s.cell(2, 3) == {"a23"}
    assert all(s.cell(i, j) == frozenset() for i in (3, 4) for j in range(1, 5))


def test_walk_generator_no_arcs():
    s = walk_generator(MultiDigraph(3))
    assert all(not c for row in s.cells for c in row)


@given(digraphs(max_n=7, parallel=True))
def test_serialize_roundtrip(g):
    assert parse_graph(serialize_graph(g)) == g


@given(digraphs(max_n=6, parallel=True))
def test_walk_generator_cardinality(g):
    s = walk_generator(g)
    mult = g.multiplicity()
    for i in g.vertices:
        for j in g.vertices:
            assert len(s.cell(i, j)) == mult[i - 1][j - 1]
