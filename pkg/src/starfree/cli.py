"""Command-line front end.

Exit codes: 0 everything holds, 2 a bound is violated, 3 a hypothesis
failed, 4 a solver size cap was hit, 1 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import limits
from .checks import HypothesisFailed, THEOREM_IDS, check
from .cubic import enumerate_cubic
from .families import FAMILIES, FamilySpec
from .graph import Graph, GraphError, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .limits import SizeCapExceeded
from .predicates import is_claw_free
from .solvers import KINDS, invariant
from .sweep import EXIT_HYPOTHESIS, EXIT_OK, EXIT_SIZE_CAP, EXIT_VIOLATED, ConfigError, equality_search, sweep_families
from .tdp import PartitionError, td_partition

EXIT_USAGE = 1


def read_graph(arg: str) -> Graph:
    """A graph6 string, or a file holding graph6 (first line) or an edge list."""
    path = Path(arg)
    if not path.is_file():
        return parse_graph6(arg)
    text = path.read_text()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError(f"{arg}: empty file")
    first = lines[0]
    if first.startswith(">>graph6<<") or (len(first.split()) == 1 and not first.startswith("#")):
        return parse_graph6(first).with_label(path.name)
    return parse_edge_list(text).with_label(path.name)


def _key_values(items: list[str]) -> dict:
    out = {}
    for item in items:
        key, eq, value = item.partition("=")
        if not eq:
            raise ValueError(f"expected key=value, got {item!r}")
        out[key] = int(value) if value.lstrip("-").isdigit() else value
    return out


def _print_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


# subcommands ----------------------------------------------------------------------------------


def cmd_invariant(args) -> int:
    g = read_graph(args.graph)
    value = invariant(g, args.kind, k=args.k, q=args.q)
    if args.json:
        _print_json(value.to_dict())
    else:
        params = "".join(f" {k}={v}" for k, v in value.params.items())
        print(f"{value.kind}{params} = {value.value}")
        print(f"witness: {' '.join(map(str, value.witness))}")
    return EXIT_OK


def cmd_check(args) -> int:
    g = read_graph(args.graph)
    params = _key_values(args.params)
    for name in ("r", "k", "q", "d"):
        if getattr(args, name) is not None:
            params[name] = getattr(args, name)
    if args.cls is not None:
        params["cls"] = args.cls
    result = check(g, args.theorem, params)
    if args.json:
        _print_json(result.to_dict())
    else:
        rel = "=" if result.equality else ("<" if result.holds else ">")
        print(f"{result.theorem_id}: {result.expression}")
        print(f"lhs {result.lhs} {rel} rhs {result.rhs}  holds={result.holds} equality={result.equality}")
        for note in result.notes:
            print(f"note: {note}")
    if not result.holds:
        print(f"counterexample graph6: {emit_graph6(g)}")
        return EXIT_VIOLATED
    return EXIT_OK


def cmd_family(args) -> int:
    spec = FamilySpec(args.name, _key_values(args.params))
    g = spec.build()
    sys.stdout.write(emit_graph6(g) + "\n" if args.emit == "g6" else emit_edge_list(g))
    return EXIT_OK


def cmd_sweep(args) -> int:
    report = sweep_families(args.config, args.workers)
    if args.jsonl:
        report.write_jsonl(args.jsonl)
    if args.csv:
        Path(args.csv).write_text(report.table_csv(args.csv_theorem))
    print(report.summary())
    return report.exit_code


def cmd_enumerate(args) -> int:
    for g in enumerate_cubic(args.n, args.strategy):
        if args.claw_free and not is_claw_free(g):
            continue
        print(emit_graph6(g))
    return EXIT_OK


def cmd_partition(args) -> int:
    g = read_graph(args.graph)
    p = td_partition(g)
    if args.json:
        _print_json({"units": p.as_lists(), "kinds": list(p.kinds)})
    else:
        for unit, kind in zip(p.units, p.kinds):
            print(f"{kind:<8} {' '.join(map(str, unit))}")
    return EXIT_OK


def cmd_equality_search(args) -> int:
    found = equality_search(args.r, args.theorem, args.budget, _key_values(args.params),
                            seed=args.seed, max_n=args.max_n)
    for g in found:
        print(emit_graph6(g))
    print(f"# {len(found)} graphs attain equality", file=sys.stderr)
    return EXIT_OK


# parser ---------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="starfree", description=__doc__.splitlines()[0])
    parser.add_argument("--cap", action="append", default=[], metavar="NAME=N",
                        help=f"override a solver size cap ({', '.join(limits.DEFAULT_CAPS)})")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariant", help="compute one exact invariant")
    p.add_argument("kind", choices=KINDS)
    p.add_argument("--k", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--r", type=int, help="accepted for symmetry with check; unused")
    p.add_argument("--json", action="store_true")
    p.add_argument("graph", help="graph6 string or file")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("check", help="evaluate one bound on a graph")
    p.add_argument("theorem", choices=THEOREM_IDS)
    p.add_argument("params", nargs="*", metavar="key=value")
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--class", dest="cls", choices=("chromatic", "bipartite", "outerplanar", "planar"))
    p.add_argument("--json", action="store_true")
    p.add_argument("graph", help="graph6 string or file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("family", help="build a named construction")
    p.add_argument("name", choices=list(FAMILIES))
    p.add_argument("params", nargs="*", metavar="key=value")
    p.add_argument("--emit", choices=("g6", "edges"), default="g6")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("sweep", help="run a TOML sweep config")
    p.add_argument("--config", required=True)
    p.add_argument("--workers", type=int)
    p.add_argument("--jsonl", help="write one JSON line per check")
    p.add_argument("--csv", help="write the bound table as CSV")
    p.add_argument("--csv-theorem", default="T2_1")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("enumerate-cubic", help="connected cubic graphs, one graph6 per line")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strategy", choices=("saturate", "insert"), default="saturate")
    p.add_argument("--claw-free", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("partition", help="triangle-diamond partition of a claw-free cubic graph")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("equality-search", help="look for graphs attaining a bound")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--theorem", choices=THEOREM_IDS, required=True)
    p.add_argument("--budget", type=int, required=True, help="graphs to examine")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("params", nargs="*", metavar="key=value")
    p.set_defaults(func=cmd_equality_search)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with limits.caps_override(**{k: int(v) for k, v in _key_values(args.cap).items()}):
            return args.func(args)
    except HypothesisFailed as exc:
        print(f"hypothesis-failed: {exc.predicate} ({exc.theorem_id})", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except SizeCapExceeded as exc:
        print(f"solver-size-exceeded: {exc}", file=sys.stderr)
        return EXIT_SIZE_CAP
    except PartitionError as exc:
        print(f"{exc.reason}: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (GraphError, ConfigError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
