"""Command-line front end: ``python -m pathcolor <command> ...``.

Exit codes: 0 success / valid, 1 invalid or failed claim, 2 inconclusive or
resource limit, 64 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import experiments, games, generators, solvers
from .coloring import brute_force_verify, verify_conflict_free, verify_proper, verify_unique_maximum
from .graph import BudgetExceeded
from .io import FormatError, parse_coloring, parse_graph, serialize_coloring, serialize_graph
from .reduction import build_reduction

EXIT_OK, EXIT_INVALID, EXIT_INCONCLUSIVE, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2
        raise UsageError(message)


def _read_graph(path: str):
    return parse_graph(Path(path).read_text())


def cmd_gen(args) -> int:
    family, x = args.family, args.param
    if family == "path":
        G = generators.path_graph(x)
    elif family == "grid":
        G, _ = generators.grid_graph(x)
    elif family == "clique":
        G = generators.complete_graph(x)
    elif family == "btree":
        G = generators.complete_binary_tree(x)
    else:
        G, _ = generators.hedgehog(x)
    text = serialize_graph(G)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_solve(args) -> int:
    G = _read_graph(args.graph)
    try:
        if args.kind == "chi":
            k, cert = solvers.chi_exact(G)
        elif args.kind == "um":
            k, cert = solvers.chi_um_exact(G)
        else:
            k, cert = solvers.chi_cf_exact(G, budget=args.budget)
    except solvers.Inconclusive as exc:
        print(f"inconclusive: optimum in [{exc.lower}, {exc.upper}]")
        return EXIT_INCONCLUSIVE
    except solvers.ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    print(k)
    out = args.output or f"{args.graph}.{args.kind}.col"
    Path(out).write_text(serialize_coloring(cert, {"method": args.kind, "optimal": k}))
    return EXIT_OK


def cmd_verify(args) -> int:
    G = _read_graph(args.graph)
    C, _ = parse_coloring(Path(args.coloring).read_text())
    if args.kind == "proper":
        v = verify_proper(G, C)
    elif args.kind == "um":
        v = verify_unique_maximum(G, C)
    elif args.brute:
        v = brute_force_verify(G, C, "cf", budget=args.budget)
    else:
        v = verify_conflict_free(G, C, budget=args.budget)
    if v.inconclusive:
        print(f"inconclusive after {v.examined} search nodes")
        return EXIT_INCONCLUSIVE
    if v.valid:
        print("valid")
        return EXIT_OK
    print("invalid")
    print("witness: " + " ".join(str(x) for x in v.witness))
    return EXIT_INVALID


MAXIMIZERS = {
    "optimal": lambda G, kind, seed: (
        games.optimal_component_maximizer(G) if kind == games.COMPONENT else games.optimal_path_maximizer(G)
    ),
    "greedy": lambda G, kind, seed: (
        games.largest_component_maximizer(G) if kind == games.COMPONENT else games.longest_path_maximizer(G)
    ),
    "random": lambda G, kind, seed: games.random_maximizer(G, kind, seed),
}
MINIMIZERS = {
    "optimal": lambda G, kind, seed: (
        games.optimal_component_minimizer(G) if kind == games.COMPONENT else games.optimal_path_minimizer(G)
    ),
    "first": lambda G, kind, seed: games.first_vertex_minimizer(G),
    "random": lambda G, kind, seed: games.random_minimizer(G, seed),
}


def cmd_game(args) -> int:
    G = _read_graph(args.graph)
    try:
        if args.mode == "vcs":
            print(games.vcs_value(G))
        elif args.mode == "vp":
            print(games.vp_value(G, budget=args.budget))
        else:
            kind = args.kind
            t = games.play_game(
                G,
                kind,
                MAXIMIZERS[args.max](G, kind, args.seed),
                MINIMIZERS[args.min](G, kind, args.seed + 1),
            )
            sys.stdout.write(t.to_log())
            print(f"length {t.length}")
    except solvers.Inconclusive as exc:
        print(f"inconclusive: value in [{exc.lower}, {exc.upper}]")
        return EXIT_INCONCLUSIVE
    except (solvers.ResourceLimitError, BudgetExceeded) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def cmd_reduce(args) -> int:
    G = _read_graph(args.graph)
    art = build_reduction(G)
    Path(f"{args.output}.graph").write_text(serialize_graph(art.gstar))
    Path(f"{args.output}.col").write_text(serialize_coloring(art.coloring, {"roles": art.roles()}))
    print(f"wrote {args.output}.graph ({art.gstar.n} vertices) and {args.output}.col ({art.coloring.k} colors)")
    return EXIT_OK


def cmd_bounds(args) -> int:
    print(f"# grid bounds, m = {args.m}")
    for b in solvers.grid_bounds(args.m).values():
        value = "n/a" if b.value is None else f"{b.value:.6f}"
        note = f"  ({b.note})" if b.note else ""
        print(f"{b.name:24s} {b.quantity} {b.direction} {value:>12s}   {b.formula}{note}")
    return EXIT_OK


def cmd_experiment(args) -> int:
    rows = experiments.EXPERIMENTS[args.name](level=args.level, seed=args.seed)
    sys.stdout.write(experiments.format_report(args.name, rows))
    statuses = {r.status for r in rows}
    if experiments.FAIL in statuses:
        return EXIT_INVALID
    if experiments.INCONCLUSIVE in statuses:
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pathcolor", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="write a generated graph")
    g.add_argument("family", choices=["path", "grid", "clique", "btree", "hedgehog"])
    g.add_argument("--param", type=int, required=True)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="exact chromatic number with certificate")
    s.add_argument("kind", choices=["chi", "um", "cf"])
    s.add_argument("graph")
    s.add_argument("--budget", type=int, default=10**6)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="check a coloring")
    v.add_argument("kind", choices=["proper", "um", "cf"])
    v.add_argument("graph")
    v.add_argument("coloring")
    v.add_argument("--budget", type=int, default=10**7)
    v.add_argument("--brute", action="store_true", help="use the unpruned reference search")
    v.set_defaults(func=cmd_verify)

    gm = sub.add_parser("game", help="game values and matches")
    gm.add_argument("mode", choices=["vcs", "vp", "play"])
    gm.add_argument("graph")
    gm.add_argument("--kind", choices=[games.COMPONENT, games.PATH], default=games.COMPONENT)
    gm.add_argument("--max", choices=sorted(MAXIMIZERS), default="optimal")
    gm.add_argument("--min", choices=sorted(MINIMIZERS), default="optimal")
    gm.add_argument("--seed", type=int, default=0)
    gm.add_argument("--budget", type=int, default=10**7)
    gm.set_defaults(func=cmd_game)

    r = sub.add_parser("reduce", help="build the Hamiltonian-path reduction instance")
    r.add_argument("graph")
    r.add_argument("-o", "--output", required=True)
    r.set_defaults(func=cmd_reduce)

    b = sub.add_parser("bounds", help="evaluate published grid bounds")
    b.add_argument("family", choices=["grid"])
    b.add_argument("--m", type=int, required=True)
    b.set_defaults(func=cmd_bounds)

    e = sub.add_parser("experiment", help="regenerate a claim table")
    e.add_argument("name", choices=sorted(experiments.EXPERIMENTS))
    e.add_argument("--level", choices=["desk", "stretch"], default="desk")
    e.add_argument("--seed", type=int, default=0)
    e.set_defaults(func=cmd_experiment)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"pathcolor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (FormatError, ValueError, KeyError, OSError) as exc:
        print(f"pathcolor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MemoryError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE


if __name__ == "__main__":
    raise SystemExit(main())
