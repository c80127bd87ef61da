"""Command-line front end: every capability as a subcommand with CSV/JSON output.

CSV is comma-separated with a header row and LF line endings; integers are
plain decimal and exact rationals print as num/den.  JSON values that can
exceed 64 bits (Pell tables) are emitted as decimal strings together with
a "bigint": true marker.  All output goes to stdout unless --output names
a file.  The environment variable DEGSQ_ORACLE_CAP overrides the default
brute-force caps of the verify subcommand.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Optional, Sequence

from . import oracle, pell, signs
from .density import density as compute_density
from .density import density_rows
from .errors import DegsqError
from .extremal import value_C, value_S
from .optimal import optimal_set


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: Sequence[str], rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _cmd_max(args) -> int:
    s, c = value_S(args.v, args.e), value_C(args.v, args.e)
    top = max(s, c)
    side = "both-optimal" if s == c else ("quasi-star-optimal" if s > c else "quasi-complete-optimal")
    if args.format == "json":
        _emit(
            _json_text({"v": args.v, "e": args.e, "S": s, "C": c, "max": top, "side": side}),
            args.output,
        )
    elif args.format == "csv":
        _emit(_csv_text(["v", "e", "S", "C", "max", "side"],
                        [[args.v, args.e, s, c, top, side]]), args.output)
    else:
        _emit(f"S={s} C={c} max={top} {side}\n", args.output)
    return 0


def _cmd_partitions(args) -> int:
    report = optimal_set(args.v, args.e)
    _emit(_json_text(report.to_json_dict()), args.output)
    return 0


def _cmd_profile(args) -> int:
    prof = signs.profile(args.v)
    sidecar = signs.sidecar_dict(prof)
    if args.format == "json":
        payload = dict(sidecar)
        payload["rows"] = [
            {"v": v, "e": e, "S": s, "C": c, "diff": d} for v, e, s, c, d in signs.profile_rows(args.v)
        ]
        _emit(_json_text(payload), args.output)
        return 0
    text = _csv_text(["v", "e", "S", "C", "diff"], signs.profile_rows(args.v))
    _emit(text, args.output)
    sidecar_path = args.sidecar
    if sidecar_path is None and args.output:
        sidecar_path = args.output + ".json"
    if sidecar_path:
        with open(sidecar_path, "w", encoding="utf-8") as handle:
            handle.write(_json_text(sidecar))
    return 0


def _families_rows(name: str, count: int):
    if name == "three":
        return ["v", "k", "e", "expected_optimal_count"], list(pell.family_three(count))
    if name == "four":
        return ["v", "k", "e", "expected_optimal_count"], list(pell.family_four(count))
    if name == "q0zero":
        return ["v", "k"], list(pell.family_q0_zero(count))
    if name == "eq-e0":
        return ["v", "k", "variant"], list(pell.family_equality_e0(count))
    raise DegsqError(f"unknown family {name!r}")


def _cmd_families(args) -> int:
    header, rows = _families_rows(args.name, args.count)
    if args.format == "json":
        payload = {
            "family": args.name,
            "bigint": True,
            "members": [
                {key: str(value) for key, value in zip(header, row)} for row in rows
            ],
        }
        _emit(_json_text(payload), args.output)
    else:
        _emit(_csv_text(header, rows), args.output)
    return 0


def _cmd_density(args) -> int:
    report = compute_density(args.t)
    if args.format == "csv":
        rows = [(v, sign, int(dom)) for v, sign, dom in density_rows(args.t)]
        _emit(_csv_text(["v", "q0_sign", "dominant"], rows), args.output)
    elif args.format == "json":
        _emit(_json_text(report.to_json_dict()), args.output)
    else:
        _emit(f"t={report.t} n={report.n} ratio={report.n}/{report.t} decimal={report.decimal}\n",
              args.output)
    return 0


def _cmd_verify(args) -> int:
    report = oracle.verify_range(
        args.max_v_partitions,
        args.max_v_graphs,
        partition_cap=args.partition_cap,
        graph_cap=args.graph_cap,
    )
    _emit(_json_text(report.to_json_dict()), args.output)
    return 1 if report.disagreements else 0


def _cmd_pell(args) -> int:
    solutions = pell.pell_solutions(args.p, args.count)
    if args.format == "json":
        payload = {
            "P": args.p,
            "bigint": True,
            "solutions": [{"V": str(s.V), "J": str(s.J)} for s in solutions],
        }
        _emit(_json_text(payload), args.output)
    elif args.format == "csv":
        _emit(_csv_text(["V", "J", "P"], [(s.V, s.J, s.P) for s in solutions]), args.output)
    else:
        lines = [f"{s.V} {s.J}" for s in solutions]
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degsq",
        description="Maximum sum of squared degrees over simple graphs with v vertices and e edges.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--output", help="write to this file instead of stdout")

    p = sub.add_parser("max", help="S, C, their maximum, and which side is optimal")
    p.add_argument("v", type=int)
    p.add_argument("e", type=int)
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    add_common(p)
    p.set_defaults(func=_cmd_max)

    p = sub.add_parser("partitions", help="full optimal-partition report as JSON")
    p.add_argument("v", type=int)
    p.add_argument("e", type=int)
    add_common(p)
    p.set_defaults(func=_cmd_partitions)

    p = sub.add_parser("profile", help="per-e table of S, C, and their difference")
    p.add_argument("v", type=int)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--sidecar", help="write the JSON summary to this file (csv format only)")
    add_common(p)
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("families", help="infinite families with a prescribed optimal count")
    p.add_argument("--name", choices=["three", "four", "q0zero", "eq-e0"], required=True)
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    add_common(p)
    p.set_defaults(func=_cmd_families)

    p = sub.add_parser("density", help="share of v for which the quasi-star side dominates")
    p.add_argument("t", type=int)
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    add_common(p)
    p.set_defaults(func=_cmd_density)

    env_cap = os.environ.get("DEGSQ_ORACLE_CAP")
    default_partition_cap = int(env_cap) if env_cap else oracle.DEFAULT_PARTITION_CAP
    default_graph_cap = int(env_cap) if env_cap else oracle.DEFAULT_GRAPH_CAP

    p = sub.add_parser("verify", help="brute-force oracles against the closed forms")
    p.add_argument("--max-v-partitions", type=int, default=10)
    p.add_argument("--max-v-graphs", type=int, default=6)
    p.add_argument("--partition-cap", type=int, default=default_partition_cap)
    p.add_argument("--graph-cap", type=int, default=default_graph_cap)
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("pell", help="solution table of V^2 - 2*J^2 = P")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--count", type=int, default=5)
    p.add_argument("--format", choices=["plain", "json", "csv"], default="plain")
    add_common(p)
    p.set_defaults(func=_cmd_pell)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DegsqError as exc:
        print(f"degsq: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
