"""Command-line front end.

One binary, four subcommands (analyze, enumerate, example, symbolic), no
configuration files: flags plus the TOPO_CACHE_DIR environment variable.
JSON and CSV outputs are byte-stable for fixed inputs and flags; text output
is for humans and carries no stability guarantee.

Exit codes: 0 on success (queries that answer "no" still succeed), 1 when a
requested check fails (--verify violations, --oracle disagreement), 2 on
usage, parse, or validation errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .constructions import build_example
from .enumeration import TABLE_MAX_POINTS, count_by_hausdorff
from .errors import BadParameter, ParseError, TopologyError, TooLarge
from .jsonio import dumps_canonical, load_topology, topology_to_dict
from .separation import (
    ORACLE_MAX_POINTS,
    analysis_report,
    axioms_report,
    hausdorff_number,
    hausdorff_number_oracle,
    is_n_hausdorff,
)
from .symbolic import (
    OMEGA,
    BugEyedSpace,
    hausdorff_number_symbolic,
    parse_point,
    parse_points,
    separable,
    t1_status,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2


def _emit(text: str, out: "str | None") -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _report_text(report: dict) -> str:
    lines = [f"points: {report['n']}",
             f"hausdorff number: {report['hausdorff_number']}",
             f"largest non-separable set: {set(report['largest_nonseparable'])}"]
    for key in ("t0", "t1", "hausdorff", "regular", "normal", "discrete", "compact"):
        lines.append(f"{key}: {'yes' if report[key] else 'no'}")
    if "oracle_hausdorff_number" in report:
        lines.append(f"oracle hausdorff number: {report['oracle_hausdorff_number']}")
        lines.append(f"oracle agrees: {'yes' if report['oracle_agrees'] else 'no'}")
    return "\n".join(lines) + "\n"


def _cmd_analyze(args) -> int:
    topology, _ = load_topology(args.input)
    report = analysis_report(topology)
    status = EXIT_OK
    if args.oracle:
        if topology.n > ORACLE_MAX_POINTS:
            raise TooLarge(
                f"--oracle supports up to {ORACLE_MAX_POINTS} points, "
                f"the input has {topology.n}")
        oracle = hausdorff_number_oracle(topology)
        report["oracle_hausdorff_number"] = oracle.value
        report["oracle_agrees"] = oracle.value == report["hausdorff_number"]
        if not report["oracle_agrees"]:
            status = EXIT_CHECK_FAILED
    if args.format == "json":
        _emit(dumps_canonical(report), args.out)
    else:
        _emit(_report_text(report), args.out)
    return status


def _table_text(table, mode: str) -> str:
    if mode == "labeled":
        return f"total {table.labeled_total}\n"
    if mode == "classes":
        return f"total {table.class_total}\n"
    lines = [f"topologies on {table.n} points"
             + (" (T0 only)" if table.t0_only else "")]
    lines.append(f"labeled total: {table.labeled_total}")
    lines.append(f"class total: {table.class_total}")
    lines.append(f"t0 labeled count: {table.t0_labeled_count}")
    if mode == "histogram":
        for k in sorted(table.rows):
            labeled, classes = table.rows[k]
            lines.append(f"H={k}: labeled {labeled}, classes {classes}")
    return "\n".join(lines) + "\n"


def _cmd_enumerate(args) -> int:
    if args.jobs < 1:
        raise BadParameter(f"--jobs must be >= 1, got {args.jobs}")
    table = count_by_hausdorff(args.n, jobs=args.jobs, cache_dir=args.cache_dir,
                               t0_only=args.t0_only)
    if args.format == "json":
        text = dumps_canonical(table.to_dict())
    elif args.format == "csv":
        text = table.to_csv()
    else:
        mode = ("labeled" if args.labeled else "classes" if args.classes
                else "histogram" if args.histogram else "totals")
        text = _table_text(table, mode)
    _emit(text, args.out)
    return EXIT_OK


def _verification_checks(name: str, topology) -> list[dict]:
    report = axioms_report(topology)
    h = hausdorff_number(topology).value
    checks = []

    def check(label: str, passed: bool) -> None:
        checks.append({"check": label, "passed": bool(passed)})

    if name == "three-point":
        check("hausdorff number is 3", h == 3)
        check("3-hausdorff", is_n_hausdorff(topology, 3))
        check("not hausdorff", not report.hausdorff)
        check("compact", report.compact)
    elif name == "four-point":
        check("hausdorff number is 3", h == 3)
        check("3-hausdorff", is_n_hausdorff(topology, 3))
        check("not discrete", not report.discrete)
        check("t0 but not t1", report.t0 and not report.t1)
    elif name.startswith("two-block:"):
        n = topology.n
        check(f"hausdorff number is {n}", h == n)
        check(f"{n}-hausdorff", is_n_hausdorff(topology, n))
        if n >= 3:
            check("not discrete", not report.discrete)
    else:  # doubled:N
        check("hausdorff number is 3", h == 3)
        check("3-hausdorff", is_n_hausdorff(topology, 3))
        check("not discrete", not report.discrete)

    if topology.n <= ORACLE_MAX_POINTS:
        oracle = hausdorff_number_oracle(topology).value
        check("oracle agrees with closed form", oracle == h)
    return checks


def _cmd_example(args) -> int:
    name, topology = build_example(args.name)
    doc = topology_to_dict(topology, name=name)
    if not args.verify:
        if args.format == "json":
            _emit(dumps_canonical(doc), args.out)
        else:
            opens = ", ".join("{" + ",".join(map(str, u)) + "}" for u in doc["opens"])
            _emit(f"{name}: n={topology.n}, opens: {opens}\n", args.out)
        return EXIT_OK

    checks = _verification_checks(name, topology)
    passed = all(c["passed"] for c in checks)
    verification = {"name": name, "passed": passed, "checks": checks,
                    "topology": doc}
    if args.out:
        _emit(dumps_canonical(doc), args.out)
    if args.format == "json":
        sys.stdout.write(dumps_canonical(verification))
    else:
        lines = [f"{name}: {'PASS' if passed else 'FAIL'}"]
        lines += [f"  [{'ok' if c['passed'] else 'FAIL'}] {c['check']}" for c in checks]
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK if passed else EXIT_CHECK_FAILED


def _cmd_symbolic(args) -> int:
    verticals = OMEGA if args.verticals.strip().lower() == "omega" else None
    if verticals is None:
        try:
            verticals = int(args.verticals)
        except ValueError:
            raise ParseError(
                f"--verticals takes a positive integer or 'omega', got {args.verticals!r}"
            ) from None
    space = BugEyedSpace(verticals, t1_variant=not args.no_t1)

    if args.symbolic_command == "separable":
        verdict = separable(space, parse_points(args.points))
        doc = verdict.to_dict()
    elif args.symbolic_command == "hnumber":
        doc = {"hausdorff_number": hausdorff_number_symbolic(space).to_dict()}
    else:  # t1
        p = parse_point(args.pair[0])
        q = parse_point(args.pair[1])
        doc = t1_status(space, p, q).to_dict(p, q)

    if args.format == "json":
        _emit(dumps_canonical(doc), args.out)
    else:
        _emit(_symbolic_text(doc), args.out)
    return EXIT_OK


def _symbolic_text(doc: dict) -> str:
    if "separable" in doc:
        if doc["separable"]:
            lines = ["separable; witness:"]
            lines += [f"  {w['point']} -> {w['neighborhood']}" for w in doc["witness"]]
            return "\n".join(lines) + "\n"
        return f"non-separable: {doc['certificate']['description']}\n"
    if "hausdorff_number" in doc:
        h = doc["hausdorff_number"]
        value = h["value"] if h["kind"] == "finite" else "omega_1"
        return f"hausdorff number: {value}\n"
    if doc["t1"]:
        return "t1 pair: yes\n"
    return f"t1 pair: no ({doc['explanation']})\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hausnum",
        description="Hausdorff numbers of finite topologies: analysis, "
                    "enumeration, named constructions, symbolic spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="separation report for a topology file")
    analyze.add_argument("input", help="finite-topology/v1 JSON file")
    analyze.add_argument("--oracle", action="store_true",
                         help="cross-check with the exhaustive oracle (n <= 5)")
    analyze.add_argument("--format", choices=("json", "text"), default="json")
    analyze.add_argument("--out", help="write the report here instead of stdout")
    analyze.set_defaults(func=_cmd_analyze)

    enum = sub.add_parser("enumerate", help="count topologies by Hausdorff number")
    enum.add_argument("n", type=int, help=f"point count (1..{TABLE_MAX_POINTS})")
    group = enum.add_mutually_exclusive_group()
    group.add_argument("--labeled", action="store_true",
                       help="text output: labeled total only")
    group.add_argument("--classes", action="store_true",
                       help="text output: homeomorphism-class total only")
    group.add_argument("--histogram", action="store_true",
                       help="text output: per-Hausdorff-number rows")
    enum.add_argument("--t0-only", action="store_true",
                      help="restrict counts to T0 topologies")
    enum.add_argument("--jobs", type=int, default=1, help="worker processes")
    enum.add_argument("--cache-dir",
                      help="cache directory (default: $TOPO_CACHE_DIR or .topo-cache)")
    enum.add_argument("--format", choices=("json", "csv", "text"), default="json")
    enum.add_argument("--out", help="write the table here instead of stdout")
    enum.set_defaults(func=_cmd_enumerate)

    example = sub.add_parser("example", help="emit a named construction")
    example.add_argument("name",
                         help="three-point | four-point | two-block:N | doubled:N")
    example.add_argument("--verify", action="store_true",
                         help="check the construction's claims; nonzero exit on failure")
    example.add_argument("--format", choices=("json", "text"), default="json")
    example.add_argument("--out", help="write the topology JSON here")
    example.set_defaults(func=_cmd_example)

    symbolic = sub.add_parser("symbolic", help="query a doubled-interval space")
    symbolic.add_argument("--verticals", required=True,
                          help="number of stacked points, or 'omega'")
    symbolic.add_argument("--no-t1", action="store_true",
                          help="use the unpunctured (non-T1) variant")
    symbolic.add_argument("--format", choices=("json", "text"), default="json")
    symbolic.add_argument("--out", help="write the verdict here instead of stdout")
    symsub = symbolic.add_subparsers(dest="symbolic_command", required=True)

    sep = symsub.add_parser("separable", help="separability of a point set")
    sep.add_argument("--points", required=True,
                     help="comma-separated points, e.g. 'b:1/2,v:1'")

    symsub.add_parser("hnumber", help="symbolic Hausdorff number of the space")

    t1 = symsub.add_parser("t1", help="mutual exclusion test for a pair")
    t1.add_argument("--pair", nargs=2, required=True, metavar=("P", "Q"))

    symbolic.set_defaults(func=_cmd_symbolic)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TopologyError as exc:
        sys.stderr.write(f"error ({exc.code}): {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
