"""Command-line front end.

Exit status: 0 success, 1 usage or input error, 2 when ``check``/``falsify``
finds an instance where the claimed verdicts disagree with the oracle.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Sequence

from walkalg import coloring, oracle, reach, walks
from walkalg.graph import (
    GraphParseError,
    MultiDigraph,
    builtin_example,
    fixture_names,
    parse_graph,
    random_graph,
)
from walkalg.matrices import render_grid

EXIT_OK, EXIT_USAGE, EXIT_FALSIFIED = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    file: str | None = None
    fixture: str | None = None
    random: str | None = None
    loops: bool = False
    k: int | None = None
    k_max: int | None = None
    cap: int | None = None
    source: int | None = None
    target: int | None = None
    format: str = "text"
    seed: int = 0
    override: bool = False
    swap: bool = False
    n_min: int = 2
    n_max: int = 6
    arc_probs: list[float] = field(default_factory=lambda: [0.5])
    trials: int = 1000

    def __post_init__(self) -> None:
        if self.subcommand != "falsify":
            given = [s for s in (self.file, self.fixture, self.random) if s is not None]
            if len(given) != 1:
                raise UsageError("give exactly one of --file, --fixture, --random")


def load_graph(config: RunConfig) -> MultiDigraph:
    if config.fixture is not None:
        try:
            return builtin_example(config.fixture)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    if config.file is not None:
        try:
            with open(config.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {config.file}: {exc.strerror}") from None
        try:
            return parse_graph(text)
        except GraphParseError as exc:
            raise UsageError(f"{config.file}: {exc}") from None
    try:
        n_text, p_text = config.random.split(":")[:2]
        n, p = int(n_text), float(p_text)
        return random_graph(n, p, config.loops, config.seed)
    except ValueError as exc:
        raise UsageError(f"bad --random spec {config.random!r} (want N:P): {exc}") from None


def _emit(fmt: str, text: str, payload) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _require(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


def _cmd_detect(g: MultiDigraph, cfg: RunConfig) -> int:
    report, fk, hk = coloring.full_detection(g, keep_matrices=True)
    lines = []
    for k in sorted(fk):
        lines += [f"F^{k}:", fk[k].render(), f"paths k={k}: {_pairs_text(report.path_pairs(k))}", ""]
    lines += ["G^1:", coloring.g_arc_coloring(g).render(), ""]
    for k in sorted(hk):
        lines += [f"H^{k}:", hk[k].render(), f"cycles k={k}: {_list_text(report.cycle_vertices(k))}", ""]
    lines.append(f"hamiltonian path: {_yes(report.hamiltonian_path)}")
    lines.append(f"hamiltonian cycle: {_yes(report.hamiltonian_cycle)}")
    _emit(cfg.format, "\n".join(lines), report.to_dict())
    return EXIT_OK


def _pairs_text(pairs) -> str:
    return " ".join(f"({i},{j})" for i, j in pairs) or "none"


def _list_text(items) -> str:
    return " ".join(str(x) for x in items) or "none"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _cmd_paths(g: MultiDigraph, cfg: RunConfig) -> int:
    k = _require(cfg.k, "--k")
    fk = coloring.f_walk_coloring(g, k)
    pairs = fk.nonempty().pairs()
    text = f"F^{k}:\n{fk.render()}\npaths k={k}: {_pairs_text(pairs)}"
    _emit(cfg.format, text, {"k": k, "pairs": [list(p) for p in pairs]})
    return EXIT_OK


def _cmd_cycles(g: MultiDigraph, cfg: RunConfig) -> int:
    k = _require(cfg.k, "--k")
    hk = coloring.h_cycle_coloring(g, k, swap=cfg.swap)
    hits = [i + 1 for i, v in enumerate(hk.verdicts()) if v]
    text = f"H^{k}:\n{hk.render()}\ncycles k={k}: {_list_text(hits)}"
    _emit(cfg.format, text, {"k": k, "vertices": hits})
    return EXIT_OK


def _cmd_reach(g: MultiDigraph, cfg: RunConfig) -> int:
    if cfg.k is not None:
        m, label = reach.boolean_walk_matrix(g, cfg.k), f"B^{cfg.k}"
    else:
        m, label = reach.reachability_closure(g), "closure"
    _emit(cfg.format, f"{label}:\n{m.render()}", {"matrix": label, "pairs": [list(p) for p in m.pairs()]})
    return EXIT_OK


def _cmd_shortest(g: MultiDigraph, cfg: RunConfig) -> int:
    i, j = _require(cfg.source, "--from"), _require(cfg.target, "--to")
    try:
        d = reach.shortest_path_length(g, i, j)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = "unreachable" if d is None else str(d)
    _emit(cfg.format, text, {"from": i, "to": j, "length": d})
    return EXIT_OK


def _cmd_clique(g: MultiDigraph, cfg: RunConfig) -> int:
    q = reach.clique_number_estimate(g)
    payload = {"estimate": q}
    text = f"clique estimate: {q}"
    if g.n <= oracle.CLIQUE_LIMIT or cfg.override:
        truth = oracle.max_clique_bruteforce(g, override=cfg.override)
        payload["bruteforce"] = truth
        text += f"\nbrute force: {truth}"
    _emit(cfg.format, text, payload)
    return EXIT_OK


def _cmd_walks(g: MultiDigraph, cfg: RunConfig) -> int:
    k = _require(cfg.k, "--k")
    m = walks.walk_sets(g, k, cfg.cap)
    rows, cells = [], []
    for i in g.vertices:
        row = []
        for j in g.vertices:
            ws = sorted("".join(w) for w in m.cell(i, j))
            tail = "+" if m.overflowed(i, j) else ""
            row.append("{" + ",".join(ws) + "}" + tail)
            if ws or tail:
                cells.append({"i": i, "j": j, "walks": ws, "overflow": m.overflowed(i, j)})
        rows.append(row)
    counts = walks.count_walks(g, k)
    text = f"S^{k}:\n{render_grid(rows)}\ntotal walks: {counts.total()}"
    _emit(cfg.format, text, {"k": k, "cap": cfg.cap, "cells": cells, "total": counts.total()})
    return EXIT_OK


def _cmd_count_ham(g: MultiDigraph, cfg: RunConfig) -> int:
    count = oracle.count_hamiltonian_cycles(g, override=cfg.override)
    claimed, _ = coloring.hamiltonian_cycle_decision(g, swap=cfg.swap)
    _emit(
        cfg.format,
        f"hamiltonian cycles: {count}\nclaimed by coloring: {_yes(claimed)}",
        {"count": count, "claimed": claimed},
    )
    return EXIT_OK


def _cmd_check(g: MultiDigraph, cfg: RunConfig) -> int:
    k_max = cfg.k_max if cfg.k_max is not None else g.n
    found = oracle.cross_validate(g, k_max, override=cfg.override)
    if cfg.format == "json":
        print(json.dumps([d.to_dict() for d in found], indent=2))
    elif not found:
        print(f"agreement on k=1..{k_max}")
    else:
        for d in found:
            where = "" if d.kind == "clique" else f" k={d.k} i={d.i}" + ("" if d.j is None else f" j={d.j}")
            print(f"{d.kind}{where}: claimed={d.claimed} actual={d.actual}")
    return EXIT_FALSIFIED if found else EXIT_OK


def _cmd_falsify(cfg: RunConfig) -> int:
    fc = oracle.FalsifyConfig(
        n_min=cfg.n_min,
        n_max=cfg.n_max,
        arc_probs=tuple(cfg.arc_probs),
        trials=cfg.trials,
        seed=cfg.seed,
        loops=cfg.loops,
    )
    try:
        cex, summary = oracle.falsify(fc)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"counterexample": cex.to_dict() if cex else None, "summary": summary.to_dict()}
    if cfg.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"instances tested: {summary.instances}")
        for kind, rate in summary.mismatch_rates().items():
            print(f"{kind} mismatch rate: {rate:.6f}")
        if cex is None:
            print("no counterexample")
        else:
            d = cex.discrepancy
            print(f"counterexample at trial {cex.trial} (graph seed {cex.graph_seed}):")
            print(f"{d.kind} k={d.k} i={d.i} j={d.j}: claimed={d.claimed} actual={d.actual}")
            print(d.graph.rstrip("\n"))
    return EXIT_FALSIFIED if cex else EXIT_OK


_COMMANDS = {
    "detect": _cmd_detect,
    "paths": _cmd_paths,
    "cycles": _cmd_cycles,
    "reach": _cmd_reach,
    "shortest": _cmd_shortest,
    "clique": _cmd_clique,
    "walks": _cmd_walks,
    "count-ham": _cmd_count_ham,
    "check": _cmd_check,
}


def run(config: RunConfig) -> int:
    try:
        if config.subcommand == "falsify":
            return _cmd_falsify(config)
        handler = _COMMANDS.get(config.subcommand)
        if handler is None:
            raise UsageError(f"unknown subcommand {config.subcommand!r}")
        return handler(load_graph(config), config)
    except (UsageError, oracle.OracleGuardError) as exc:
        print(f"walkalg: {exc}", file=sys.stderr)
        return EXIT_USAGE


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="walkalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def graph_opts(p: argparse.ArgumentParser) -> None:
        p.add_argument("--file", help="edge-list graph file")
        p.add_argument("--fixture", help=f"builtin graph: {', '.join(fixture_names())}")
        p.add_argument("--random", metavar="N:P", help="random graph with N vertices, arc probability P")
        p.add_argument("--loops", action="store_true", help="allow loops in --random graphs")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--override", action="store_true", help="lift oracle size guards")

    helps = {
        "detect": "all path/cycle verdicts from the F/G/H colorings",
        "paths": "claimed k-paths (F^k)",
        "cycles": "claimed k-cycles (H^k)",
        "reach": "Boolean walk matrix B^k, or the closure without --k",
        "shortest": "shortest walk length by single-row Boolean iteration",
        "clique": "Q-iteration clique estimate and brute-force clique number",
        "walks": "walk sets S^k written in arcs",
        "count-ham": "number of Hamiltonian cycles by permutation sum",
        "check": "cross-validate claimed verdicts against the oracle",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        graph_opts(p)
        if name in ("paths", "cycles", "walks"):
            p.add_argument("--k", type=int, required=True)
        if name == "reach":
            p.add_argument("--k", type=int)
        if name in ("cycles", "count-ham"):
            p.add_argument("--swap", action="store_true", help="use G^{k-1} and F^1 instead of F^{k-1} and G^1")
        if name == "walks":
            p.add_argument("--cap", type=int, default=64)
        if name == "shortest":
            p.add_argument("--from", dest="source", type=int, required=True)
            p.add_argument("--to", dest="target", type=int, required=True)
        if name == "check":
            p.add_argument("--k-max", type=int)

    f = sub.add_parser("falsify", help="search random graphs for a counterexample")
    f.add_argument("--n-min", type=int, default=2)
    f.add_argument("--n-max", type=int, default=6)
    f.add_argument("--arc-prob", dest="arc_probs", type=float, action="append")
    f.add_argument("--trials", type=int, default=1000)
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--loops", action="store_true")
    f.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    values = {k: v for k, v in vars(args).items() if v is not None}
    if args.subcommand == "falsify" and not args.arc_probs:
        values["arc_probs"] = [0.5]
    try:
        config = RunConfig(**values)
    except UsageError as exc:
        print(f"walkalg: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
