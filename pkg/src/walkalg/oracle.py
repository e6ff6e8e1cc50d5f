"""Exhaustive-search ground truth and the falsification harness.

Everything here works from the arc list alone. The claimed verdicts of
``walkalg.coloring`` and ``walkalg.reach`` are compared against it by
``cross_validate`` and ``falsify``.

Size guards keep the exponential searches from hanging: paths and cycles
n <= 12, Hamiltonian-cycle counting n <= 10, cliques n <= 20. Pass
``override=True`` or set ``WALKALG_ORACLE_LIMIT`` to raise them.
"""
from __future__ import annotations

import json
import os
import random
from dataclasses import asdict, dataclass, field
from typing import Sequence

from walkalg.coloring import detect_cycles, detect_paths
from walkalg.graph import MultiDigraph, random_graph, serialize_graph
from walkalg.matrices import BoolMatrix
from walkalg.reach import clique_number_estimate

PATH_LIMIT = 12
HAMILTON_LIMIT = 10
CLIQUE_LIMIT = 20


class OracleGuardError(RuntimeError):
    pass


def _guard(n: int, limit: int, what: str, override: bool) -> None:
    if override:
        return
    env = os.environ.get("WALKALG_ORACLE_LIMIT")
    if env:
        limit = max(limit, int(env))
    if n > limit:
        raise OracleGuardError(
            f"{what} oracle refuses n={n} > {limit}; pass override or set WALKALG_ORACLE_LIMIT"
        )


def _succ_masks(g: MultiDigraph) -> list[int]:
    """Bit (j-1) of entry i-1 is set iff an arc runs i -> j."""
    succ = [0] * g.n
    for a in g.arcs:
        succ[a.src - 1] |= 1 << (a.dst - 1)
    return succ


def enumerate_paths(
    g: MultiDigraph, i: int, j: int, k: int, limit: int | None = None
) -> tuple[list[list[int]], bool]:
    """All simple paths with ``k`` arcs from v_i to v_j, by DFS backtracking.

    Returns ``(paths, truncated)``; paths are vertex lists in lexicographic
    order and at most ``limit`` are kept.
    """
    if k < 1:
        raise ValueError(f"path length must be >= 1, got {k}")
    succ = [g.successors(v) for v in range(g.n + 1)]
    found: list[list[int]] = []
    truncated = False
    seq = [i]
    on_path = {i}

    def extend() -> bool:
        nonlocal truncated
        if len(seq) == k + 1:
            if seq[-1] == j:
                if limit is not None and len(found) >= limit:
                    truncated = True
                    return False
                found.append(list(seq))
            return True
        for w in succ[seq[-1]]:
            if w in on_path:
                continue
            # the finish vertex may only appear last
            if w == j and len(seq) < k:
                continue
            seq.append(w)
            on_path.add(w)
            keep_going = extend()
            seq.pop()
            on_path.discard(w)
            if not keep_going:
                return False
        return True

    if i != j and k < g.n:
        extend()
    return found, truncated


def _path_endpoints(g: MultiDigraph) -> list[list[int]]:
    """ends[k][s] = bitmask of v such that a simple k-arc path runs s -> v.

    Dynamic programming over (visited set, last vertex); each state carries
    the set of start vertices that can reach it.
    """
    n = g.n
    succ = _succ_masks(g)
    frontier: dict[tuple[int, int], int] = {}
    for v in range(n):
        frontier[(1 << v, v)] = 1 << v
    ends = [[0] * n for _ in range(n)]
    for k in range(1, n):
        nxt: dict[tuple[int, int], int] = {}
        for (mask, v), srcs in frontier.items():
            out = succ[v] & ~mask
            while out:
                low = out & -out
                w = low.bit_length() - 1
                key = (mask | low, w)
                nxt[key] = nxt.get(key, 0) | srcs
                out ^= low
        for (_, w), srcs in nxt.items():
            s = srcs
            while s:
                low = s & -s
                ends[k][low.bit_length() - 1] |= 1 << w
                s ^= low
        frontier = nxt
        if not frontier:
            break
    return ends


def _ends_matrix(n: int, rows: list[int]) -> BoolMatrix:
    return BoolMatrix.from_pairs(
        n, ((s + 1, v + 1) for s in range(n) for v in range(n) if rows[s] >> v & 1)
    )


def oracle_path_table(g: MultiDigraph, override: bool = False) -> dict[int, BoolMatrix]:
    """True k-path existence matrices for every k = 1..n-1."""
    _guard(g.n, PATH_LIMIT, "path", override)
    ends = _path_endpoints(g)
    return {k: _ends_matrix(g.n, ends[k]) for k in range(1, g.n)}


def oracle_path_matrix(g: MultiDigraph, k: int, override: bool = False) -> BoolMatrix:
    if k < 1:
        raise ValueError(f"path length must be >= 1, got {k}")
    _guard(g.n, PATH_LIMIT, "path", override)
    if k >= g.n:
        return BoolMatrix.zeros(g.n)
    return _ends_matrix(g.n, _path_endpoints(g)[k])


def _cycles_from_ends(g: MultiDigraph, ends: list[list[int]], k: int) -> tuple[bool, ...]:
    n = g.n
    succ = _succ_masks(g)
    if k == 1:
        return tuple(bool(succ[v] >> v & 1) for v in range(n))
    if k > n:
        return (False,) * n
    # a k-cycle through v is a (k-1)-path v -> x closed by an arc x -> v
    out = []
    for v in range(n):
        closers = ends[k - 1][v]
        hit = any(closers >> x & 1 and succ[x] >> v & 1 for x in range(n))
        out.append(hit)
    return tuple(out)


def oracle_cycle_table(g: MultiDigraph, override: bool = False) -> dict[int, tuple[bool, ...]]:
    _guard(g.n, PATH_LIMIT, "cycle", override)
    ends = _path_endpoints(g)
    return {k: _cycles_from_ends(g, ends, k) for k in range(1, g.n + 1)}


def oracle_cycle_vector(g: MultiDigraph, k: int, override: bool = False) -> tuple[bool, ...]:
    if k < 1:
        raise ValueError(f"cycle length must be >= 1, got {k}")
    _guard(g.n, PATH_LIMIT, "cycle", override)
    return _cycles_from_ends(g, _path_endpoints(g), k)


def max_clique_bruteforce(g: MultiDigraph, override: bool = False) -> int:
    """Largest vertex set whose members are pairwise joined in both directions."""
    _guard(g.n, CLIQUE_LIMIT, "clique", override)
    n = g.n
    pairs = g.arc_pairs()
    nbr = [0] * n
    for i, j in pairs:
        if i != j and (j, i) in pairs:
            nbr[i - 1] |= 1 << (j - 1)
    best = 1

    def expand(size: int, candidates: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while candidates:
            if size + candidates.bit_count() <= best:
                return
            low = candidates & -candidates
            v = low.bit_length() - 1
            candidates ^= low
            expand(size + 1, candidates & nbr[v])

    expand(0, (1 << n) - 1)
    return best


def count_hamiltonian_cycles(g: MultiDigraph, override: bool = False) -> int:
    """(1/n) * sum over all n! vertex orders of the closed product of arc indicators.

    Each directed Hamiltonian cycle appears once per rotation, so the sum is
    n times the cycle count. Orders are grown by backtracking and a prefix is
    dropped as soon as its product is zero.
    """
    _guard(g.n, HAMILTON_LIMIT, "Hamiltonian", override)
    n = g.n
    succ = _succ_masks(g)
    full = (1 << n) - 1
    total = 0

    def grow(first: int, last: int, used: int) -> None:
        nonlocal total
        if used == full:
            if succ[last] >> first & 1:
                total += 1
            return
        nxt = succ[last] & ~used
        while nxt:
            low = nxt & -nxt
            grow(first, low.bit_length() - 1, used | low)
            nxt ^= low

    for first in range(n):
        grow(first, first, 1 << first)
    if total % n:
        raise ArithmeticError(f"permutation sum {total} not divisible by n={n}")
    return total // n


@dataclass(frozen=True)
class Discrepancy:
    graph: str
    kind: str  # "path" | "cycle" | "clique"
    k: int | None
    i: int | None
    j: int | None
    claimed: bool | int
    actual: bool | int

    def to_dict(self) -> dict:
        return asdict(self)


def cross_validate(
    g: MultiDigraph, k_max: int, include_clique: bool = True, override: bool = False
) -> list[Discrepancy]:
    """Every disagreement between the claimed verdicts and the oracle, k = 1..k_max."""
    _guard(g.n, PATH_LIMIT, "path", override)
    text = serialize_graph(g)
    ends = _path_endpoints(g)
    found: list[Discrepancy] = []
    for k in range(1, k_max + 1):
        claimed = detect_paths(g, k)
        actual = _ends_matrix(g.n, ends[k]) if k < g.n else BoolMatrix.zeros(g.n)
        if claimed != actual:
            for i in g.vertices:
                for j in g.vertices:
                    if claimed[i, j] != actual[i, j]:
                        found.append(Discrepancy(text, "path", k, i, j, claimed[i, j], actual[i, j]))
    for k in range(1, k_max + 1):
        claimed_c = detect_cycles(g, k)
        actual_c = _cycles_from_ends(g, ends, k)
        for i, (c, a) in enumerate(zip(claimed_c, actual_c), start=1):
            if c != a:
                found.append(Discrepancy(text, "cycle", k, i, None, c, a))
    if include_clique:
        _guard(g.n, CLIQUE_LIMIT, "clique", override)
        q = clique_number_estimate(g)
        truth = max_clique_bruteforce(g, override=True)
        if q != truth:
            found.append(Discrepancy(text, "clique", None, None, None, q, truth))
    return found


@dataclass(frozen=True)
class FalsifyConfig:
    n_min: int = 2
    n_max: int = 6
    arc_probs: Sequence[float] = (0.5,)
    trials: int = 1000
    seed: int = 0
    loops: bool = False
    include_clique: bool = True
    stop_at_first: bool = True


@dataclass(frozen=True)
class Counterexample:
    discrepancy: Discrepancy
    seed: int
    trial: int
    graph_seed: int
    n: int
    arc_prob: float

    def to_dict(self) -> dict:
        out = self.discrepancy.to_dict()
        out.update(seed=self.seed, trial=self.trial, graph_seed=self.graph_seed, n=self.n, arc_prob=self.arc_prob)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


@dataclass
class FalsifySummary:
    instances: int = 0
    instances_with_discrepancy: int = 0
    path_checks: dict[int, int] = field(default_factory=dict)
    path_agree: dict[int, int] = field(default_factory=dict)
    cycle_checks: dict[int, int] = field(default_factory=dict)
    cycle_agree: dict[int, int] = field(default_factory=dict)
    mismatches: dict[str, int] = field(default_factory=lambda: {"path": 0, "cycle": 0, "clique": 0})
    clique_checks: int = 0

    def mismatch_rates(self) -> dict[str, float]:
        path_cells = sum(self.path_checks.values())
        cycle_cells = sum(self.cycle_checks.values())
        denom = {"path": path_cells, "cycle": cycle_cells, "clique": self.clique_checks}
        return {kind: (self.mismatches[kind] / d if d else 0.0) for kind, d in denom.items()}

    def to_dict(self) -> dict:
        return {
            "instances": self.instances,
            "instances_with_discrepancy": self.instances_with_discrepancy,
            "path_agreement": {str(k): [self.path_agree.get(k, 0), v] for k, v in sorted(self.path_checks.items())},
            "cycle_agreement": {str(k): [self.cycle_agree.get(k, 0), v] for k, v in sorted(self.cycle_checks.items())},
            "mismatches": dict(self.mismatches),
            "mismatch_rates": self.mismatch_rates(),
        }


def trial_graph(config: FalsifyConfig, trial: int) -> tuple[MultiDigraph, int, float, int]:
    """The graph of one trial, reproducible from ``(config.seed, trial)`` alone."""
    rng = random.Random(f"walkalg-falsify:{config.seed}:{trial}")
    n = rng.randint(config.n_min, config.n_max)
    p = config.arc_probs[rng.randrange(len(config.arc_probs))]
    graph_seed = rng.getrandbits(64)
    return random_graph(n, p, config.loops, graph_seed), n, p, graph_seed


def falsify(config: FalsifyConfig) -> tuple[Counterexample | None, FalsifySummary]:
    """Cross-validate random graphs until a discrepancy turns up or trials run out.

    With ``stop_at_first=False`` all trials run; the returned counterexample
    is still the one from the lowest trial index.
    """
    if config.n_min < 1 or config.n_max < config.n_min:
        raise ValueError("need 1 <= n_min <= n_max")
    _guard(config.n_max, PATH_LIMIT, "path", False)
    summary = FalsifySummary()
    first: Counterexample | None = None
    for trial in range(config.trials):
        g, n, p, graph_seed = trial_graph(config, trial)
        found = cross_validate(g, n, include_clique=config.include_clique)
        summary.instances += 1
        per_k_path: dict[int, int] = {}
        per_k_cycle: dict[int, int] = {}
        for d in found:
            summary.mismatches[d.kind] += 1
            if d.kind == "path":
                per_k_path[d.k] = per_k_path.get(d.k, 0) + 1
            elif d.kind == "cycle":
                per_k_cycle[d.k] = per_k_cycle.get(d.k, 0) + 1
        for k in range(1, n + 1):
            summary.path_checks[k] = summary.path_checks.get(k, 0) + n * n
            summary.path_agree[k] = summary.path_agree.get(k, 0) + n * n - per_k_path.get(k, 0)
            summary.cycle_checks[k] = summary.cycle_checks.get(k, 0) + n
            summary.cycle_agree[k] = summary.cycle_agree.get(k, 0) + n - per_k_cycle.get(k, 0)
        if config.include_clique:
            summary.clique_checks += 1
        if found:
            summary.instances_with_discrepancy += 1
            if first is None:
                first = Counterexample(found[0], config.seed, trial, graph_seed, n, p)
            if config.stop_at_first:
                break
    return first, summary
