"""Command line front end.

Commands
--------
spread exact <spec>            exact spread of a small permutation group
spread atleast <spec> --r R    decide s(G) >= R
bound class <spec|table> --class NAME   |class| - 1 bound for one class
trick <table> --target CLASS   even-order elimination report
certify <table> <cert>         re-derive a certified bound
verify-table1 <dir>            re-derive a whole bounds table
bw --q Q                       published exact spread of L2(q)

Global options: --format text|machine, --out PATH.  Exit codes:
0 success, 1 a check failed, 2 bad input, 3 resource limit hit.

Machine reports contain only schedule-independent data (no timings or
node counts), so they are byte-stable across runs and thread counts.
"""

import argparse
import json
import sys
from pathlib import Path

from . import fixtures
from .cover import CoverSearchConfig, exact_spread, spread_at_least, woldar_bound_elementwise
from .errors import (
    OutOfRange,
    ParseError,
    ResidualMismatch,
    SpreadLabError,
    ValidationError,
)
from .perm import ClassPartition, GroupIndex, to_cycles
from .support import bits_of, matrix_from_spec
from .trick import brenner_wiegold_spread, certify, even_order_trick, woldar_bound

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

# Row order used by published spread tables for the sporadic groups.
TABLE1_ORDER = [
    "M11", "M12", "J1", "M22", "J2", "M23", "HS", "J3", "M24", "McL",
    "He", "Ru", "Suz", "ON", "Co3", "Co2", "Fi22", "HN", "Ly", "Th",
    "Fi23", "Co1", "J4", "Fi24'", "B", "M",
]


def _emit(args, text_lines, machine_doc):
    if args.format == "machine":
        payload = json.dumps(machine_doc, indent=2) + "\n"
    else:
        payload = "\n".join(text_lines) + "\n"
    if args.out:
        Path(args.out).write_text(payload)
    else:
        sys.stdout.write(payload)


def _load_group(path):
    spec = fixtures.load_group_spec(path)
    group = GroupIndex(spec.generators, spec.degree)
    if group.order != spec.order:
        raise ValidationError("$.order", "enumeration disagrees with declared order")
    classes = ClassPartition(group)
    return spec, group, classes


def _element_text(group, element_id):
    cycles = to_cycles(group.elements[element_id])
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)


def _cmd_spread_exact(args):
    spec, group, classes = _load_group(args.spec)
    matrix = matrix_from_spec(group, spec, classes)
    config = CoverSearchConfig(
        threads=args.threads,
        node_budget=args.node_budget,
        time_budget=args.time_budget,
    )
    result = exact_spread(matrix, config)
    witness_text = [
        _element_text(group, x) for x in (result.witness or ())
    ]
    doc = {
        "command": "spread-exact",
        "group": spec.name,
        **result.stable_dict(),
        "witnessElements": witness_text,
    }
    if result.exact:
        lines = [
            f"group {spec.name}: spread = {result.spread} (exact)",
            f"minimum supporting set size {result.min_cover_size}: "
            + ", ".join(witness_text),
            f"search: {result.nodes} nodes, {result.wall_time:.2f}s",
        ]
        _emit(args, lines, doc)
        return EXIT_OK
    lines = [
        f"group {spec.name}: spread in [{result.spread_lower}, {result.spread_upper}] "
        "(budget exhausted, NOT exact)",
        f"best supporting set so far ({len(result.witness)} elements): "
        + ", ".join(witness_text),
        f"search: {result.nodes} nodes, {result.wall_time:.2f}s",
    ]
    _emit(args, lines, doc)
    return EXIT_RESOURCE


def _cmd_spread_atleast(args):
    spec, group, classes = _load_group(args.spec)
    matrix = matrix_from_spec(group, spec, classes)
    config = CoverSearchConfig(
        threads=args.threads,
        node_budget=args.node_budget,
        time_budget=args.time_budget,
    )
    holds, witness = spread_at_least(matrix, args.r, config)
    doc = {
        "command": "spread-atleast",
        "group": spec.name,
        "r": args.r,
        "holds": holds,
        "witness": list(witness) if witness else None,
    }
    if holds:
        lines = [f"group {spec.name}: spread >= {args.r} holds"]
        _emit(args, lines, doc)
        return EXIT_OK
    witness_text = [_element_text(group, x) for x in witness]
    doc["witnessElements"] = witness_text
    lines = [
        f"group {spec.name}: spread >= {args.r} FAILS",
        f"supporting {args.r}-set with no common mate: " + ", ".join(witness_text),
    ]
    _emit(args, lines, doc)
    return EXIT_CHECK_FAILED


def _cmd_bound_class(args):
    text = Path(args.input).read_text()
    doc = json.loads(text)
    if "classes" in doc:
        table = fixtures.parse_class_table(text)
        if not table.has_class(args.class_name):
            raise ValidationError("$.classes", f"no class named {args.class_name!r}")
        value = woldar_bound(table, args.class_name)
        out = {
            "command": "bound-class",
            "group": table.name,
            "class": args.class_name,
            "bound": str(value),
            "mode": "table",
        }
        _emit(
            args,
            [f"group {table.name}: s <= {value} from class {args.class_name}"],
            out,
        )
        return EXIT_OK

    spec, group, classes = _load_group(args.input)
    table = fixtures.class_table_from_group(spec.name, group, classes, spec.simple)
    names = [c.name for c in table.classes]
    if args.class_name not in names:
        raise ValidationError("$.classes", f"no class named {args.class_name!r}")
    ci = names.index(args.class_name)
    members = classes.members[ci]
    matrix = matrix_from_spec(group, spec, classes)
    value = woldar_bound_elementwise(matrix, members)
    out = {
        "command": "bound-class",
        "group": spec.name,
        "class": args.class_name,
        "bound": None if value is None else str(value),
        "mode": "elementwise",
    }
    if value is None:
        _emit(
            args,
            [
                f"group {spec.name}: class {args.class_name} does not support G#,"
                " no bound from this class"
            ],
            out,
        )
        return EXIT_CHECK_FAILED
    _emit(
        args,
        [f"group {spec.name}: s <= {value} from class {args.class_name} (elementwise)"],
        out,
    )
    return EXIT_OK


def _cmd_trick(args):
    table = fixtures.load_class_table(args.table)
    report = even_order_trick(table, args.target)
    doc = {
        "command": "trick",
        "group": table.name,
        "target": args.target,
        "eliminated": report.eliminated,
        "residual": report.residual,
    }
    lines = [
        f"group {table.name}, target {args.target}:",
        f"eliminated {len(report.eliminated)} classes "
        f"(each a power of an even-order class)",
    ]
    lines += [
        f"  {cname} <- {witness}" for cname, witness in sorted(report.eliminated.items())
    ]
    lines.append("residual: " + (", ".join(report.residual) or "(none)"))
    _emit(args, lines, doc)
    return EXIT_OK


def _certify_doc(report):
    return {
        "group": report.name,
        "target": report.target,
        "bound": str(report.bound),
        "status": report.status,
        "assumedExternal": report.assumed_external,
        "classes": [
            {
                "class": v.class_name,
                "status": v.status,
                "evidence": [
                    {"kind": item.kind, "status": outcome.status, "detail": outcome.detail}
                    for item, outcome in v.outcomes
                ],
            }
            for v in report.verdicts
        ],
    }


def _cmd_certify(args):
    table = fixtures.load_class_table(args.table)
    cert = fixtures.load_certificate(args.cert, table)
    try:
        report = certify(table, cert)
    except ResidualMismatch as err:
        doc = {
            "command": "certify",
            "group": table.name,
            "status": "failed",
            "failedCheck": "residual-match",
            "detail": str(err),
        }
        _emit(args, [f"group {table.name}: FAILED residual-match: {err}"], doc)
        return EXIT_CHECK_FAILED
    doc = {"command": "certify", **_certify_doc(report)}
    lines = [
        f"group {report.name}: target {report.target}, bound {report.bound}: "
        f"{report.status.upper()}"
        + (
            f" ({report.assumed_external} external assumption(s))"
            if report.assumed_external
            else ""
        )
    ]
    for v in report.verdicts:
        lines.append(f"  {v.class_name}: {v.status}")
        for item, outcome in v.outcomes:
            lines.append(f"    [{item.kind}] {outcome.status}: {outcome.detail}")
    if report.status != "certified":
        for cname, kind, detail in report.failing_checks():
            lines.append(f"FAILED check: {cname} [{kind}] {detail}")
        _emit(args, lines, doc)
        return EXIT_CHECK_FAILED
    _emit(args, lines, doc)
    return EXIT_OK


def _cmd_verify_table1(args):
    root = Path(args.dir)
    tables_dir = root / "tables"
    certs_dir = root / "certs"
    pass_dir = root / "passthrough"

    tables = {}
    for path in sorted(tables_dir.glob("*.json")) if tables_dir.is_dir() else []:
        table = fixtures.load_class_table(path)
        tables[table.name] = table

    rows = {}
    any_failed = False
    for path in sorted(certs_dir.glob("*.json")) if certs_dir.is_dir() else []:
        doc = json.loads(path.read_text())
        name = doc.get("name")
        if name not in tables:
            raise ValidationError(str(path), f"no class table for {name!r}")
        cert = fixtures.load_certificate(path, tables[name])
        try:
            report = certify(tables[name], cert)
            status = report.status
            detail = (
                f"{report.assumed_external} external assumption(s)"
                if report.assumed_external
                else "all evidence machine-checked"
            )
            bound = report.bound
        except ResidualMismatch as err:
            status, detail, bound = "failed", str(err), cert.bound
        if status != "certified":
            any_failed = True
        rows[name] = {
            "group": name,
            "bound": str(bound),
            "kind": "certified" if status == "certified" else "failed",
            "detail": detail,
        }

    for path in sorted(pass_dir.glob("*.json")) if pass_dir.is_dir() else []:
        row = fixtures.load_passthrough(path)
        rows[row.name] = {
            "group": row.name,
            "bound": str(row.bound),
            "kind": "passthrough",
            "detail": row.source,
        }

    def sort_key(name):
        if name in TABLE1_ORDER:
            return (0, TABLE1_ORDER.index(name))
        return (1, name)

    ordered = [rows[name] for name in sorted(rows, key=sort_key)]
    doc = {"command": "verify-table1", "rows": ordered}
    width = max((len(r["group"]) for r in ordered), default=5)
    lines = [f"{'group':<{width}}  {'bound':>34}  status"]
    for r in ordered:
        lines.append(
            f"{r['group']:<{width}}  {r['bound']:>34}  {r['kind']} ({r['detail']})"
        )
    _emit(args, lines, doc)
    return EXIT_CHECK_FAILED if any_failed else EXIT_OK


def _cmd_bw(args):
    value = brenner_wiegold_spread(args.q)
    doc = {"command": "bw", "q": args.q, "spread": value}
    _emit(args, [f"L2({args.q}): spread = {value}"], doc)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="spreadlab", description="spread computations for finite simple groups"
    )
    parser.add_argument("--format", choices=("text", "machine"), default="text")
    parser.add_argument("--out", help="write the report to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    spread = sub.add_parser("spread", help="exact spread computations")
    spread_sub = spread.add_subparsers(dest="subcommand", required=True)

    exact = spread_sub.add_parser("exact", help="exact spread with a witness")
    exact.add_argument("spec")
    exact.add_argument("--threads", type=int, default=1)
    exact.add_argument("--node-budget", type=int, default=None)
    exact.add_argument("--time-budget", type=float, default=None)
    exact.set_defaults(handler=_cmd_spread_exact)

    atleast = spread_sub.add_parser("atleast", help="decide spread >= r")
    atleast.add_argument("spec")
    atleast.add_argument("--r", type=int, required=True)
    atleast.add_argument("--threads", type=int, default=1)
    atleast.add_argument("--node-budget", type=int, default=None)
    atleast.add_argument("--time-budget", type=float, default=None)
    atleast.set_defaults(handler=_cmd_spread_atleast)

    bound = sub.add_parser("bound", help="single-class bounds")
    bound_sub = bound.add_subparsers(dest="subcommand", required=True)
    bound_class = bound_sub.add_parser("class", help="|class| - 1 bound")
    bound_class.add_argument("input", help="group spec or class table")
    bound_class.add_argument("--class", dest="class_name", required=True)
    bound_class.set_defaults(handler=_cmd_bound_class)

    trick = sub.add_parser("trick", help="even-order elimination")
    trick.add_argument("table")
    trick.add_argument("--target", required=True)
    trick.set_defaults(handler=_cmd_trick)

    cert = sub.add_parser("certify", help="check a certificate")
    cert.add_argument("table")
    cert.add_argument("cert")
    cert.set_defaults(handler=_cmd_certify)

    table1 = sub.add_parser("verify-table1", help="re-derive a bounds table")
    table1.add_argument("dir")
    table1.set_defaults(handler=_cmd_verify_table1)

    bw = sub.add_parser("bw", help="published exact spread of L2(q)")
    bw.add_argument("--q", type=int, required=True)
    bw.set_defaults(handler=_cmd_bw)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (ParseError, ValidationError, OutOfRange, FileNotFoundError) as err:
        print(f"input error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except (json.JSONDecodeError,) as err:
        print(f"input error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except SpreadLabError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
