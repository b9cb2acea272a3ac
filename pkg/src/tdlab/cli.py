"""Command-line front end.

Subcommands: td, check-labeling, report, family, search, verify-paper.
Graph input is auto-detected: a first line whose bytes all fall in 63..126
with no whitespace is graph6, anything else is the edge-list format
("n m" header then one "u v" line per edge). Exit codes: 0 success,
1 domain failure (infeasible labeling, budget exceeded, failed criteria),
2 usage.
"""

from __future__ import annotations

import argparse
import json
import sys

from .criticality import criticality_report
from .errors import BudgetError, Graph6Error
from .families import FAMILY_NAMES, FamilySpec, PATTERNS, generate
from .graphs import Graph, parse_edge_list, parse_graph6, to_graph6
from .labelings import format_labeling, parse_labeling
from .search import ENUM_MAX_N, SearchJob, run_search
from .solver import MAX_VERTICES, tree_depth, verify_feasible
from .verify import verify_paper


class UsageError(Exception):
    pass


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _looks_like_graph6(text: str) -> bool:
    line = text.lstrip("\n").split("\n", 1)[0].rstrip("\r")
    if not line:
        return False
    return all(63 <= ord(c) <= 126 for c in line)


def _read_graph(path: str | None, fmt: str | None) -> Graph:
    text = _read_text(path)
    if fmt is None:
        fmt = "g6" if _looks_like_graph6(text) else "edges"
    if fmt == "g6":
        for raw in text.splitlines():
            line = raw.strip()
            if line and not line.startswith(">>"):
                return parse_graph6(line)
        raise Graph6Error("no graph6 line in input", 0)
    return parse_edge_list(text)


def _cmd_td(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.format)
    witness = tree_depth(g, args.budget)
    if args.json:
        print(json.dumps({
            "td": witness.value,
            "labeling": list(witness.labeling),
            "elimination_forest": list(witness.elimination_forest),
        }))
    else:
        print(witness.value)
        print(format_labeling(witness.labeling))
    return 0


def _cmd_check_labeling(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.format)
    labels = parse_labeling(args.labeling)
    if len(labels) != g.n:
        raise UsageError(f"labeling has {len(labels)} entries for a graph on {g.n} vertices")
    check = verify_feasible(g, labels)
    if args.json:
        print(json.dumps({
            "feasible": check.feasible,
            "violation": list(check.violation) if check.violation else None,
        }))
    elif check.feasible:
        print("feasible")
    else:
        c, u, v = check.violation
        print(f"infeasible: label {c} repeats on vertices {u} and {v} without a higher label between them")
    return 0 if check.feasible else 1


def _cmd_report(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.format)
    report = criticality_report(g, args.budget)
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True))
        return 0
    print(f"td: {report.td}")
    print(f"surplus: {report.surplus}")
    print(f"minor-critical: {report.is_minor_critical}")
    print(f"subgraph-critical: {report.is_subgraph_critical}")
    print(f"induced-subgraph-critical: {report.is_induced_subgraph_critical}")
    print(f"1-unique: {report.is_one_unique_graph}")
    print(f"one_unique: {','.join(str(int(b)) for b in report.one_unique)}")
    print(f"min_t: {','.join('-' if t is None else str(t) for t in report.min_t)}")
    checks = report.conjecture_checks
    print(f"order bound (n <= 2^(td-1)): {checks['order']}")
    print(f"degree bound (maxdeg <= td-1): {checks['maxdeg']}")
    return 0


def _cmd_family(args: argparse.Namespace) -> int:
    if args.name == "pattern":
        if args.param is None:
            raise UsageError(f"pattern family needs an id from {sorted(PATTERNS)}")
        spec = FamilySpec(name="pattern", pattern_id=args.param)
    else:
        if args.param is None:
            raise UsageError(f"family {args.name} needs an integer parameter")
        try:
            param = int(args.param)
        except ValueError:
            raise UsageError(f"family {args.name} needs an integer parameter") from None
        spec = FamilySpec(name=args.name, param=param)
    g = generate(spec)
    if args.json:
        print(json.dumps({"graph6": to_graph6(g), "n": g.n, "edges": g.edge_count()}))
    else:
        print(to_graph6(g))
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    if (args.n is None) == (args.input is None):
        raise UsageError("search needs exactly one source: --n or --input")
    job = SearchJob(
        td_target=args.td,
        n=args.n,
        graph6_path=args.input,
        critical=args.critical,
        non_one_unique=args.non_1_unique,
        connected_only=args.connected_only,
        budget=args.budget,
        allow_skips=args.allow_skips,
        threads=args.threads,
    )
    result = run_search(job)
    payload = result.to_json()
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


def _cmd_verify_paper(args: argparse.Namespace) -> int:
    results = verify_paper(args.level, args.n8_stream)
    if args.json:
        print(json.dumps([
            {
                "criterion": r.cid,
                "title": r.title,
                "passed": r.passed,
                "detail": r.detail,
                "seconds": round(r.seconds, 3),
            }
            for r in results
        ], indent=2))
    else:
        for r in results:
            print(r.line())
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tdlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", help="graph file (default: stdin)")
        p.add_argument("--format", choices=("g6", "edges"), help="override input auto-detection")
        p.add_argument("--json", action="store_true", help="JSON output")
        p.add_argument("--budget", type=int, default=MAX_VERTICES,
                       help=f"vertex cap for the solver (<= {MAX_VERTICES})")

    p_td = sub.add_parser("td", help="tree-depth with witness labeling")
    add_graph_input(p_td)
    p_td.set_defaults(fn=_cmd_td)

    p_check = sub.add_parser("check-labeling", help="verify a labeling is feasible")
    add_graph_input(p_check)
    p_check.add_argument("labeling", help="comma-separated labels in vertex order")
    p_check.set_defaults(fn=_cmd_check_labeling)

    p_report = sub.add_parser("report", help="criticality and uniqueness report")
    add_graph_input(p_report)
    p_report.set_defaults(fn=_cmd_report)

    p_family = sub.add_parser("family", help="emit a named family member as graph6")
    p_family.add_argument("name", choices=FAMILY_NAMES)
    p_family.add_argument("param", nargs="?", help="integer parameter, or pattern id for 'pattern'")
    p_family.add_argument("--json", action="store_true")
    p_family.set_defaults(fn=_cmd_family)

    p_search = sub.add_parser("search", help="screen graphs for critical / non-1-unique hits")
    p_search.add_argument("--td", type=int, required=True, help="target tree-depth")
    p_search.add_argument("--n", type=int, help=f"built-in enumeration order (1..{ENUM_MAX_N})")
    p_search.add_argument("--input", help="graph6 stream file")
    p_search.add_argument("--critical", action="store_true", help="keep only minor-critical graphs")
    p_search.add_argument("--non-1-unique", dest="non_1_unique", action="store_true",
                          help="keep only graphs with a non-1-unique vertex")
    p_search.add_argument("--connected-only", action="store_true")
    p_search.add_argument("--threads", type=int, default=1)
    p_search.add_argument("--budget", type=int, default=MAX_VERTICES)
    p_search.add_argument("--allow-skips", action="store_true",
                          help="tolerate graphs over the budget (recorded as skips)")
    p_search.add_argument("--output", help="write the JSON result here instead of stdout")
    p_search.set_defaults(fn=_cmd_search)

    p_verify = sub.add_parser("verify-paper", help="run the replication criteria")
    p_verify.add_argument("--level", choices=("quick", "full"), default="quick")
    p_verify.add_argument("--n8-stream", help="optional graph6 file with the 8-vertex census")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(fn=_cmd_verify_paper)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (Graph6Error, BudgetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry_point() -> None:
    sys.exit(main())
