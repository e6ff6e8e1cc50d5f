import pytest
from hypothesis import strategies as st

from walkalg import MultiDigraph, builtin_example

# criterion number -> list of (passed, detail); one summary line per criterion
ACCEPTANCE: dict[int, list[tuple[bool, str]]] = {}


def record(criterion: int, passed: bool, detail: str) -> None:
    ACCEPTANCE.setdefault(criterion, []).append((passed, detail))
    print(f"criterion {criterion}: {'PASS' if passed else 'FAIL'} - {detail}")


@st.composite
def digraphs(draw, min_n=1, max_n=6, loops=True, parallel=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if loops or i != j]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=not parallel, max_size=len(pairs) * (2 if parallel else 1)))
    return MultiDigraph.from_pairs(n, chosen)


def complete_digraph(n):
    return MultiDigraph.from_pairs(n, [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j])


@pytest.fixture
def dion():
    return builtin_example("dion")


@pytest.fixture
def dion_ext():
    return builtin_example("dion-extended")


@pytest.fixture
def cx4():
    return builtin_example("counterexample-n4")


@pytest.fixture
def empty3():
    return MultiDigraph(3)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for c in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[c]
        verdict = "PASS" if all(ok for ok, _ in parts) else "FAIL"
        terminalreporter.write_line(f"criterion {c}: {verdict} - " + "; ".join(d for _, d in parts))
