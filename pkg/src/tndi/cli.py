"""Command-line driver: ``tndi <verb> ...``.

Exit status: 0 success, 1 a coloring failed verification, 2 bad usage,
3 the search budget ran out, 4 an internal invariant broke.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import asdict

from . import constructions as cons
from . import graph as gr
from .classifier import (
    ConjectureViolation,
    TheoremMismatch,
    classify,
    conjecture_sweep,
    format_table,
    theorem_table,
)
from .coloring import (
    CoverageError,
    ImproperColoringError,
    verify_proper_total,
    verify_set_distinguishing,
    verify_sum_distinguishing,
)
from .io import dumps, graph_to_json, load_coloring, load_graph, save_json, to_dot
from .solver import MODES, NoSolutionError, SearchTimeout, lower_bound, solve_exact

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_TIMEOUT, EXIT_INTERNAL = 0, 1, 2, 3, 4

FAMILIES = sorted({"path", "cycle", "star", "wheel", "complete", "complete_bipartite", "hypercube"}
                  | set(cons.SUPPORTED))


class UsageError(Exception):
    pass


def _spec(args) -> gr.FamilySpec:
    if getattr(args, "spec", None):
        return gr.FamilySpec.parse(args.spec)
    if not args.family:
        raise UsageError("give --family (with --m/--n) or --spec")
    return gr.FamilySpec.of(args.family, args.m, args.n)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_build(args) -> int:
    g = gr.build(_spec(args))
    _emit(dumps(graph_to_json(g)), args.out)
    return EXIT_OK


def cmd_construct(args) -> int:
    spec = _spec(args)
    c = cons.construct(spec)
    g = gr.build(spec)
    if not verify_sum_distinguishing(g, c).ok:
        raise AssertionError(f"construction for {spec.label} failed its own check")
    if args.graph_out:
        save_json(graph_to_json(g), args.graph_out)
    _emit(dumps(c.to_json()), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    c = load_coloring(args.coloring)
    proper = verify_proper_total(g, c)
    if not proper.ok:
        for v in proper.violations:
            print(f"{v.kind}: {v.first} / {v.second}")
        return EXIT_VERIFY
    check = verify_sum_distinguishing if args.mode == "sums" else verify_set_distinguishing
    verdict = check(g, c)
    for v in verdict.violations:
        print(f"{v.kind}: {v.first} / {v.second}")
    if verdict.ok:
        print(f"ok: proper total coloring, adjacent vertices distinguished by {args.mode}")
        return EXIT_OK
    return EXIT_VERIFY


def cmd_solve(args) -> int:
    g = load_graph(args.graph)
    try:
        r = solve_exact(g, args.mode, args.k_max, budget=args.budget, threads=args.threads)
    except NoSolutionError as exc:
        out = {"mode": args.mode, "min_k": None, "k_max": exc.k_max,
               "nodes_explored": exc.nodes_explored}
        if args.mode == "sums":
            out["lower_bound"] = lower_bound(g)
        sys.stdout.write(dumps(out))
        return EXIT_OK
    sys.stdout.write(dumps(r.to_json()))
    return EXIT_OK


def cmd_classify(args) -> int:
    spec = _spec(args)
    verdict = classify(spec, budget=args.budget, threads=args.threads)
    out = {"graph": spec.label, **verdict.to_json()}
    sys.stdout.write(dumps(out))
    return EXIT_OK


TABLE_COLUMNS = ["family", "label", "delta", "lower_bound", "claimed", "achieved", "cls", "certified"]


def cmd_table(args) -> int:
    try:
        rows = theorem_table(args.max_param)
    except TheoremMismatch as exc:
        sys.stderr.write(f"mismatch: {exc}\n")
        sys.stdout.write(dumps({"row": asdict(exc.row), "coloring": exc.coloring}))
        return EXIT_VERIFY
    dicts = [asdict(r) for r in rows]
    if args.json:
        save_json({"max_param": args.max_param, "rows": dicts}, args.json)
    sys.stdout.write(format_table(dicts, TABLE_COLUMNS) + "\n")
    return EXIT_OK


def cmd_sweep(args) -> int:
    report = conjecture_sweep(
        args.samples, args.max_n, args.seed, budget=args.budget, workers=args.workers
    )
    if args.out:
        save_json(report.to_json(), args.out)
    sys.stdout.write(report.summary() + "\n")
    return EXIT_OK


def cmd_export_dot(args) -> int:
    g = load_graph(args.graph)
    c = load_coloring(args.coloring) if args.coloring else None
    _emit(to_dot(g, c), args.out)
    return EXIT_OK


def _family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=FAMILIES, help="family name (products: grid, torus, ...)")
    p.add_argument("--m", type=int, help="first parameter (first factor for products)")
    p.add_argument("--n", type=int, help="second parameter (second factor for products)")
    p.add_argument("--spec", help="family label instead of --family, e.g. W5 or C5xC4")


def _search_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--budget", type=int, help="node budget per k (default: $TNDI_BUDGET or 50M)")
    p.add_argument("--threads", type=int, default=1, help="worker processes for the search")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tndi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("build", help="write a family graph as JSON")
    _family_args(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("construct", help="write the family's explicit coloring")
    _family_args(p)
    p.add_argument("--out")
    p.add_argument("--graph-out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a coloring against a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring", required=True)
    p.add_argument("--mode", choices=("sums", "sets"), default="sums")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="exact minimum number of colors")
    p.add_argument("--graph", required=True)
    p.add_argument("--mode", choices=MODES, default="sums")
    p.add_argument("--k-max", type=int)
    _search_args(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("classify", help="class I/II/III of a family instance")
    _family_args(p)
    _search_args(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", help="verify every family up to a parameter bound")
    p.add_argument("--max-param", type=int, required=True)
    p.add_argument("--json", help="also write the rows as JSON here")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("sweep", help="classify random connected graphs")
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--budget", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="write the full JSON report here")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("export-dot", help="Graphviz rendering, labeled by colors and sums")
    p.add_argument("--graph", required=True)
    p.add_argument("--coloring")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, gr.ParameterError, cons.UnsupportedFamilyError, FileNotFoundError) as exc:
        sys.stderr.write(f"tndi {args.verb}: {exc}\n")
        return EXIT_USAGE
    except (CoverageError, ImproperColoringError) as exc:
        sys.stderr.write(f"tndi {args.verb}: {exc}\n")
        return EXIT_VERIFY
    except (ValueError, KeyError) as exc:
        sys.stderr.write(f"tndi {args.verb}: {exc}\n")
        return EXIT_USAGE
    except SearchTimeout as exc:
        sys.stderr.write(f"tndi {args.verb}: {exc}\n")
        return EXIT_TIMEOUT
    except (AssertionError, ConjectureViolation) as exc:
        sys.stderr.write(f"tndi {args.verb}: internal invariant broken: {exc}\n")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
