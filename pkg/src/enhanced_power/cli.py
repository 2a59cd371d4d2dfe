"""Command-line entry point.

Exit codes: 0 when every checked statement holds, 1 when a disagreement is
found, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import generate_catalog, load_group, write_report
from .constructions import builtin
from .graph import build_graph, diameter, export_dot, k_subgroup
from .groups import (
    GroupError,
    ResourceLimitError,
    center,
    is_cyclic,
    is_generalized_quaternion,
    is_solvable,
    subgroup_as_group,
    sylow,
)
from .structure import open_question_rows, theorem_b_verify, verify_group

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def resolve_group(arg: str):
    """A path to a GroupSpec JSON file, or a built-in name such as ``C3xQ8``."""
    try:
        if Path(arg).is_file():
            return load_group(arg)
        return builtin(arg)
    except (GroupError, ResourceLimitError, OSError) as exc:
        raise UsageError(str(exc)) from exc


def _fmt_diam(d) -> str:
    return "infinite" if d == float("inf") else str(d)


def cmd_analyze(args) -> int:
    G = resolve_group(args.group)
    print(f"group      {G.name}")
    print(f"order      {G.n}")
    print(f"primes     {G.primes}")
    print(f"solvable   {is_solvable(G)}")
    Z = center(G)
    print(f"|Z(G)|     {len(Z)}  members {list(Z.members)}")
    if G.n == 1:
        print("K(G)       trivial group (no graph)")
        return EXIT_OK
    K1, K2 = k_subgroup(G, "universal"), k_subgroup(G, "intersection")
    agree = K1.members == K2.members
    print(f"|K(G)|     {K1.order}  members {list(K1.members.members)}  methods agree: {agree}")
    print(f"diameter   {_fmt_diam(diameter(build_graph(G)))}")
    for p in G.primes:
        P = sylow(G, p)
        cyc = is_cyclic(P)[0]
        gq = is_generalized_quaternion(subgroup_as_group(P))
        print(f"sylow {p:<4} order {len(P)}  cyclic {cyc}  generalized quaternion {gq}")
    return EXIT_OK if agree else EXIT_DISAGREE


def _catalog_groups(max_order: int):
    try:
        return [e.group for e in generate_catalog(max_order)]
    except GroupError as exc:
        raise UsageError(str(exc)) from exc


def cmd_verify_a(args) -> int:
    reports = []
    for G in _catalog_groups(args.max_order):
        if not is_solvable(G):
            continue
        reports.append(verify_group(G, timing=args.timing))
    if args.report:
        write_report(reports, args.report, args.format)
    bad = [r for r in reports if not r.theorem_a.agrees]
    for r in bad:
        print(f"DISAGREEMENT {r.name}: {json.dumps(r.theorem_a.to_dict())}")
    print(f"prime characterization: {len(reports)} solvable groups, {len(bad)} disagreements")
    return EXIT_DISAGREE if bad else EXIT_OK


def cmd_verify_b(args) -> int:
    checked, bad = 0, []
    reports = []
    for G in _catalog_groups(args.max_order):
        rep = theorem_b_verify(G)
        if not rep.applicable:
            continue
        checked += 1
        if args.report:
            reports.append(verify_group(G, timing=args.timing))
        if not rep.agrees:
            bad.append((G.name, rep))
    if args.report:
        write_report(reports, args.report, args.format)
    for name, rep in bad:
        print(f"DISAGREEMENT {name}: {json.dumps(rep.to_dict())}")
    print(f"two-prime diameter: {checked} applicable groups, {len(bad)} disagreements")
    return EXIT_DISAGREE if bad else EXIT_OK


def cmd_graph(args) -> int:
    G = resolve_group(args.group)
    if G.n < 2:
        raise UsageError("the trivial group has an empty enhanced power graph")
    text = export_dot(build_graph(G))
    if args.dot:
        Path(args.dot).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_catalog(args) -> int:
    try:
        entries = generate_catalog(args.max_order)
    except GroupError as exc:
        raise UsageError(str(exc)) from exc
    if args.list:
        for e in entries:
            alias = f"  (= {', '.join(e.aliases)})" if e.aliases else ""
            print(f"{e.group.n:>4}  {e.name:<16} {e.provenance}{alias}")
    print(f"{len(entries)} groups of order <= {args.max_order} (families, products, matrix groups; not a complete classification)")
    return EXIT_OK


def cmd_scan(args) -> int:
    rows = open_question_rows(_catalog_groups(args.max_order))
    print(f"{'group':<18}{'order':>6}{'diam':>10}{'|Z|':>6}{'|K|':>6}  agree")
    findings = 0
    for r in rows:
        agree = (r.diameter == 2) == (r.center_order > 1)
        findings += not agree
        print(f"{r.name:<18}{r.order:>6}{_fmt_diam(r.diameter):>10}{r.center_order:>6}{r.k_order:>6}  {agree}")
    print(f"{len(rows)} three-prime groups scanned, {findings} candidate counterexamples")
    return EXIT_OK


def cmd_selftest(args) -> int:
    from .acceptance import run_all

    checks = run_all()
    return EXIT_OK if all(c.passed for c in checks) else EXIT_DISAGREE


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="enhanced-power", description="Enhanced power graphs and K(G) verification")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="summarize one group")
    p.add_argument("group", help="GroupSpec JSON path or built-in name (e.g. Q8, C3xQ8, SL2_3)")
    p.set_defaults(func=cmd_analyze)

    for verb, func, text in (
        ("verify-a", cmd_verify_a, "solvable-group characterization sweep"),
        ("verify-b", cmd_verify_b, "two-prime diameter sweep"),
    ):
        p = sub.add_parser(verb, help=text)
        p.add_argument("--max-order", type=int, required=True)
        p.add_argument("--report", help="write per-group records to this path")
        p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
        p.add_argument("--timing", action="store_true", help="record elapsed seconds (makes reports nondeterministic)")
        p.set_defaults(func=func)

    p = sub.add_parser("graph", help="export the enhanced power graph as DOT")
    p.add_argument("group")
    p.add_argument("--dot", help="output path (default: stdout)")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("catalog", help="generate the group corpus")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("scan-open-question", help="diameter vs center for three-prime groups")
    p.add_argument("--max-order", type=int, required=True)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("selftest", help="run the acceptance checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
