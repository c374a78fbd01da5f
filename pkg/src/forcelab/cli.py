"""Command-line front end.

    forcelab gen peony 6 3 4 --out py634.txt
    forcelab closure py634.txt --blue c,u1,0 --trace
    forcelab solve py634.txt --algorithm fortbb
    forcelab forts graph.txt --minimal --max-size 3
    forcelab verify web --m 3..9 --r 1..3

Exit codes: 0 success, 1 stall or failed verification, 2 usage or parse
error, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .errors import DomainError, ParameterError, UnsupportedError
from .forcing import ForcePolicy, closure, run_chronology
from .forts import enumerate_forts, enumerate_minimal_forts, extract_fort_from_failure
from .generators import (
    PeonyParams,
    WebParams,
    make_complete,
    make_cycle,
    make_cycle_path_product,
    make_path,
    make_peony,
    make_web,
)
from .graph import Graph, VertexSet
from .io import GraphFormatError, format_edge_list, graph_to_json, read_graph, write_graph
from .solver import ENUMERATE_CAP, EXHAUSTIVE_CAP, default_threads, solve
from . import verify

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_CAP = 3

FAMILY_ARITY = {"peony": 3, "web": 2, "prism": 2, "path": 1, "cycle": 1, "complete": 1}

DEFAULT_RANGES = {
    "peony": {"m": "3..4", "r": "2..3", "s": "1..2"},
    "web": {"m": "3..10", "r": "1..3"},
    "prism": {"m": "3..8", "r": "1..3"},
    "forts": {"m": "3..5", "r": "2..3", "s": "1..3"},
}


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"3..5"`` -> [3, 4, 5]; ``"3,7"`` -> [3, 7]; ``"4"`` -> [4]."""
    values = []
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = part.split("..", 1)
                values.extend(range(int(lo), int(hi) + 1))
            elif part:
                values.append(int(part))
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected forms like 3..5 or 3,5,7") from None
    if not values:
        raise UsageError(f"empty range {text!r}")
    return values


def parse_blue(g: Graph, text: str) -> VertexSet:
    """Comma or space separated vertex ids; labels such as ``c`` or ``u1`` also work."""
    members = []
    for token in text.replace(",", " ").split():
        if token.lstrip("-").isdigit():
            v = int(token)
            if not 0 <= v < g.n:
                raise UsageError(f"vertex id {v} outside 0..{g.n - 1}")
            members.append(v)
        else:
            try:
                members.append(g.vertex_of(token))
            except (DomainError, ValueError) as exc:
                raise UsageError(str(exc)) from None
    return g.vertex_set(members)


def emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _ids(g: Graph, s) -> str:
    members = s.to_list() if isinstance(s, VertexSet) else list(s)
    if g.labels is None:
        return " ".join(map(str, members))
    return " ".join(f"{v}:{g.label(v)}" for v in members)


# Subcommands -------------------------------------------------------------------------

def build_family(family: str, params: list[int]) -> Graph:
    arity = FAMILY_ARITY[family]
    if len(params) != arity:
        raise UsageError(f"{family} takes {arity} integer parameter(s), got {len(params)}")
    if family == "peony":
        return make_peony(PeonyParams(*params))
    if family == "web":
        return make_web(WebParams(*params))
    if family == "prism":
        return make_cycle_path_product(*params)
    if family == "path":
        return make_path(*params)
    if family == "cycle":
        return make_cycle(*params)
    return make_complete(*params)


def cmd_gen(args) -> int:
    g = build_family(args.family, args.params)
    if args.out:
        if args.format == "json":
            Path(args.out).write_text(json.dumps(graph_to_json(g), indent=2) + "\n")
        else:
            write_graph(g, args.out)
        print(f"wrote {g.name} ({g.n} vertices, {g.num_edges} edges) to {args.out}", file=sys.stderr)
    elif args.format == "json":
        print(json.dumps(graph_to_json(g), indent=2))
    else:
        sys.stdout.write(format_edge_list(g))
    return EXIT_OK


def cmd_closure(args) -> int:
    g = read_graph(args.graph)
    blue = parse_blue(g, args.blue)
    policy = ForcePolicy(args.policy)
    rng = random.Random(args.seed) if policy is ForcePolicy.RANDOM else None
    chron = run_chronology(g, blue, policy, rng)
    final = chron.final()
    complete = len(final) == g.n
    payload = {
        "graph": g.name,
        "initial": blue.to_list(),
        "final": final.to_list(),
        "complete": complete,
        "steps": len(chron.steps),
        "policy": policy.value,
    }
    lines = [
        f"graph     {g.name or '(unnamed)'}  n={g.n}",
        f"policy    {policy.value}" + (f" seed={args.seed}" if rng else ""),
        f"steps     {len(chron.steps)}",
        f"final     {_ids(g, final)}",
        f"complete  {'yes' if complete else 'no'}",
    ]
    if args.trace:
        payload["trace"] = chron.to_json()
        lines.append("trace     " + json.dumps(chron.to_json()))
    if not complete:
        fort = extract_fort_from_failure(g, blue)
        payload["fort"] = fort.to_list()
        lines.append(f"fort      {_ids(g, fort.vertices)}  (size {len(fort)}, certificate of stall)")
    emit(args, payload, "\n".join(lines))
    assert closure(g, blue) == final
    return EXIT_OK if complete else EXIT_NEGATIVE


def cmd_solve(args) -> int:
    g = read_graph(args.graph)
    report = solve(g, args.algorithm, cap=args.cap, threads=args.threads)
    payload = report.to_json(g.name)
    lines = [
        f"graph      {g.name or '(unnamed)'}  n={g.n} e={g.num_edges}",
        f"algorithm  {report.algorithm}",
        f"z          {report.z}",
        f"witness    {_ids(g, report.witness)}",
        f"forts      {len(report.lower_bound_forts)} in lower-bound certificate",
        f"stats      nodes={report.stats.nodes} closures={report.stats.closures} "
        f"time={report.stats.wall_time:.3f}s",
    ]
    emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_forts(args) -> int:
    g = read_graph(args.graph)
    minimal = enumerate_minimal_forts(g, args.max_size, cap=args.cap)
    payload = {"graph": g.name, "minimal_forts": [f.to_list() for f in minimal], "count": len(minimal)}
    shown = minimal
    if not args.minimal:
        shown = enumerate_forts(g, args.max_size, cap=args.cap)
        payload["forts"] = [f.to_list() for f in shown]
        payload["forts_count"] = len(shown)
    lines = [f"{len(f):>3}  {_ids(g, f.vertices)}" for f in shown]
    kind = "minimal forts" if args.minimal else f"forts ({len(minimal)} minimal)"
    lines.append(f"{len(shown)} {kind}")
    emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _ranges(args, suite: str) -> dict[str, list[int]]:
    defaults = DEFAULT_RANGES.get(suite, {})
    return {k: parse_range(getattr(args, k) or v) for k, v in defaults.items()}


def cmd_verify(args) -> int:
    suites = ["peony", "web", "prism", "forts", "core", "oracle"] if args.suite == "all" else [args.suite]
    rows = []
    for suite in suites:
        rg = _ranges(args, suite)
        if suite == "peony":
            rows += verify.peony_suite(rg["m"], rg["r"], rg["s"], threads=args.threads)
        elif suite == "web":
            rows += verify.web_suite(rg["m"], rg["r"], threads=args.threads)
        elif suite == "prism":
            rows += verify.prism_suite(rg["m"], rg["r"], threads=args.threads)
        elif suite == "forts":
            rows += verify.fort_family_suite(rg["m"], rg["r"], rg["s"], seed=args.seed)
        elif suite == "core":
            rows += verify.core_suite(args.seed)
        else:
            rows += verify.oracle_suite(args.seed, threads=args.threads)
    ok = all(r.passed for r in rows)
    payload = {
        "suite": args.suite,
        "seed": args.seed,
        "rows": [r.to_json() for r in rows],
        "passed": sum(r.passed for r in rows),
        "total": len(rows),
        "all_passed": ok,
    }
    emit(args, payload, f"seed {args.seed}\n" + verify.format_table(rows))
    return EXIT_OK if ok else EXIT_NEGATIVE


# Parser ---------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="forcelab", description="Zero forcing laboratory.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a graph family member")
    p.add_argument("family", choices=sorted(FAMILY_ARITY))
    p.add_argument("params", type=int, nargs="+")
    p.add_argument("--out", help="output path (a .labels.json sidecar is written beside it)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("closure", parents=[common], help="run the forcing process from a blue set")
    p.add_argument("graph", help="edge-list or JSON graph file, '-' for stdin")
    p.add_argument("--blue", required=True, help="initial blue vertices, e.g. 0,3,5 or c,u1")
    p.add_argument("--policy", choices=[x.value for x in ForcePolicy], default=ForcePolicy.ALL_EAGER.value)
    p.add_argument("--trace", action="store_true", help="include the full chronology")
    p.add_argument("--seed", type=int, default=0, help="seed for the random policy")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("solve", parents=[common], help="compute the zero forcing number")
    p.add_argument("graph")
    p.add_argument("--algorithm", choices=["fortbb", "exhaustive"], default="fortbb")
    p.add_argument("--threads", type=int, default=default_threads())
    p.add_argument("--cap", type=int, default=EXHAUSTIVE_CAP, help="vertex cap for exhaustive search")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("forts", parents=[common], help="enumerate forts")
    p.add_argument("graph")
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--minimal", action="store_true", help="only inclusion-minimal forts")
    p.add_argument("--cap", type=int, default=ENUMERATE_CAP)
    p.set_defaults(func=cmd_forts)

    p = sub.add_parser("verify", parents=[common], help="run formula sweeps and property suites")
    p.add_argument("suite", choices=["peony", "web", "prism", "forts", "core", "oracle", "all"])
    p.add_argument("--m")
    p.add_argument("--r")
    p.add_argument("--s")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=default_threads())
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphFormatError, ParameterError, DomainError) as exc:
        print(f"forcelab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnsupportedError as exc:
        print(f"forcelab: cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
