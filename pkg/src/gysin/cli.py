"""Command-line interface.

Commands:
  pushforward  compute one push-forward (residue, closed form, oracle or all)
  schur        print a Schur polynomial
  verify       sweep all three methods over a partition range
  table        tabulate push-forwards as CSV or JSON

Exit codes: 0 ok, 1 verification mismatch, 2 invalid usage or input,
3 internal inconsistency between methods.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .errors import GysinError, InternalInconsistency
from .localization import GenericPoint, default_point, localization_sum, seeded_points
from .partitions import Partition
from .poly import SparsePoly
from .pushforward import closed_form, pushforward_schur, pushforward_symmetric
from .schur import schur_bialternant, schur_dual_jacobi_trudi, schur_tableaux
from .spaces import Space, SpaceKind
from .verification import ALL_KINDS, run_verification, table_rows

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_INCONSISTENT = 3

_SCHUR_BUILDERS = {
    "bialternant": schur_bialternant,
    "tableaux": schur_tableaux,
    "jacobi-trudi": schur_dual_jacobi_trudi,
}


def _parse_point(text: str, n: int) -> GenericPoint:
    try:
        values = [Fraction(token.strip()) for token in text.split(",")]
    except (ValueError, ZeroDivisionError):
        raise GysinError(f"cannot parse rational vector {text!r}") from None
    if len(values) != n:
        raise GysinError(f"expected {n} coordinates in --t, got {len(values)}")
    return GenericPoint(values)


def _poly_payload(p: SparsePoly, var: str) -> dict:
    return {"nvars": p.nvars, "variable": var, "terms": p.to_records()}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gysin",
        description=(
            "Exact push-forwards of Schur and symmetric-polynomial classes "
            "over Lagrangian and orthogonal Grassmannians."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=0, help="seed for generic points")

    p_push = sub.add_parser("pushforward", help="push one Schur class forward")
    p_push.add_argument("--space", required=True, choices=[k.value for k in SpaceKind])
    p_push.add_argument("--n", required=True, type=int)
    p_push.add_argument("--lambda", dest="lam", required=True, metavar="LAMBDA",
                        help='partition, e.g. "4,3,1" ("0" for empty)')
    p_push.add_argument("--method", choices=("residue", "closed", "abbv", "all"),
                        default="residue")
    p_push.add_argument("--t", help="rational evaluation point, e.g. \"1,2\" or \"1/2,3\"")
    add_common(p_push)

    p_schur = sub.add_parser("schur", help="print a Schur polynomial")
    p_schur.add_argument("--lambda", dest="lam", required=True, metavar="LAMBDA")
    p_schur.add_argument("--n", required=True, type=int)
    p_schur.add_argument("--via", choices=sorted(_SCHUR_BUILDERS), default="bialternant",
                         help="construction to use (debugging aid)")
    add_common(p_schur)

    p_verify = sub.add_parser("verify", help="cross-validate all three methods")
    p_verify.add_argument("--space", choices=[k.value for k in SpaceKind],
                          help="restrict to one space kind (default: all)")
    p_verify.add_argument("--n-max", type=int, default=3)
    p_verify.add_argument("--weight-max", type=int, default=9)
    p_verify.add_argument("--points", type=int, default=2,
                          help="seeded oracle points per case (plus the default point)")
    p_verify.add_argument("--inject-fault", action="store_true",
                          help="test mode: corrupt one case to exercise mismatch reporting")
    add_common(p_verify)

    p_table = sub.add_parser("table", help="tabulate push-forwards")
    p_table.add_argument("--space", required=True, choices=[k.value for k in SpaceKind])
    p_table.add_argument("--n", required=True, type=int)
    p_table.add_argument("--weight-max", type=int, default=6)
    add_common(p_table)

    return parser


def _cmd_pushforward(args, out) -> int:
    space = Space(SpaceKind(args.space), args.n)
    lam = Partition.from_text(args.lam)
    point = _parse_point(args.t, space.n) if args.t else default_point(space.n)

    if args.method == "closed":
        result = closed_form(lam, space)
        residue_text = None
        oracle = None
    elif args.method == "abbv":
        oracle = localization_sum(schur_bialternant(lam, space.n), space, point)
        result = None
        residue_text = None
    elif args.method == "residue":
        result = pushforward_schur(lam, space)
        residue_text = result.value.render("t")
        oracle = None
    else:  # all
        schur = schur_bialternant(lam, space.n)
        residue_value = pushforward_symmetric(schur, space)
        expected = closed_form(lam, space)
        points = [point] + seeded_points(space.n, 2, args.seed)
        oracle_ok = all(
            localization_sum(schur, space, pt) == residue_value.evaluate(pt.values)
            for pt in points
        )
        closed_ok = residue_value == expected.value
        agreement = closed_ok and oracle_ok
        if args.format == "json":
            payload = {
                "command": "pushforward",
                "space": args.space,
                "n": args.n,
                "lambda": list(lam.parts),
                "method": "all",
                "value": _poly_payload(residue_value, "t"),
                "text": residue_value.render("t"),
                "mu": list(expected.mu.parts) if expected.mu is not None else None,
                "constant": str(expected.constant) if expected.constant is not None else None,
                "methods": {
                    "residue": residue_value.render("t"),
                    "closed": expected.value.render("t"),
                    "oracle_points": len(points),
                    "closed_match": closed_ok,
                    "oracle_match": oracle_ok,
                },
                "agreement": agreement,
            }
            print(json.dumps(payload, indent=2), file=out)
        else:
            print(f"space: {space.label()}", file=out)
            print(f"lambda: {lam.to_text()}", file=out)
            print("method: all", file=out)
            print(f"value: {residue_value.render('t')}", file=out)
            if expected.mu is not None:
                print(f"mu: {expected.mu.to_text()}", file=out)
                print(f"constant: {expected.constant}", file=out)
            print(f"residue: {residue_value.render('t')}", file=out)
            print(f"closed: {expected.value.render('t')}", file=out)
            print(f"oracle-points: {len(points)}", file=out)
            print(f"agreement: {'ok' if agreement else 'MISMATCH'}", file=out)
        return EXIT_OK if agreement else EXIT_INCONSISTENT

    if args.method == "abbv":
        if args.format == "json":
            payload = {
                "command": "pushforward",
                "space": args.space,
                "n": args.n,
                "lambda": list(lam.parts),
                "method": "abbv",
                "t": [str(v) for v in point.values],
                "oracle": str(oracle),
            }
            print(json.dumps(payload, indent=2), file=out)
        else:
            print(f"space: {space.label()}", file=out)
            print(f"lambda: {lam.to_text()}", file=out)
            print("method: abbv", file=out)
            print(f"t: {','.join(str(v) for v in point.values)}", file=out)
            print(f"oracle: {oracle}", file=out)
        return EXIT_OK

    if args.format == "json":
        payload = {
            "command": "pushforward",
            "space": args.space,
            "n": args.n,
            "lambda": list(lam.parts),
            "method": args.method,
            "value": _poly_payload(result.value, "t"),
            "text": result.value.render("t"),
            "mu": list(result.mu.parts) if result.mu is not None else None,
            "constant": str(result.constant) if result.constant is not None else None,
        }
        print(json.dumps(payload, indent=2), file=out)
    else:
        print(f"space: {space.label()}", file=out)
        print(f"lambda: {lam.to_text()}", file=out)
        print(f"method: {args.method}", file=out)
        print(f"value: {result.value.render('t')}", file=out)
        if result.mu is not None:
            print(f"mu: {result.mu.to_text()}", file=out)
            print(f"constant: {result.constant}", file=out)
    return EXIT_OK


def _cmd_schur(args, out) -> int:
    lam = Partition.from_text(args.lam)
    builder = _SCHUR_BUILDERS[args.via]
    value = builder(lam, args.n)
    if args.format == "json":
        payload = {
            "command": "schur",
            "lambda": list(lam.parts),
            "n": args.n,
            "via": args.via,
            "value": _poly_payload(value, "z"),
            "text": value.render("z"),
        }
        print(json.dumps(payload, indent=2), file=out)
    else:
        print(value.render("z"), file=out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    kinds = (SpaceKind(args.space),) if args.space else ALL_KINDS
    report = run_verification(
        n_max=args.n_max,
        weight_max=args.weight_max,
        kinds=kinds,
        seed=args.seed,
        oracle_points=args.points,
        inject_fault=args.inject_fault,
    )
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2), file=out)
    else:
        names = ",".join(k.value for k in kinds)
        print(
            f"verify: spaces={names} n-max={args.n_max} weight-max={args.weight_max} "
            f"seed={args.seed} points={args.points + 1}",
            file=out,
        )
        for case in report.cases:
            status = "ok  " if case.ok else "FAIL"
            extras = ""
            if case.closed.mu is not None:
                extras = f" mu={case.closed.mu.to_text()} constant={case.closed.constant}"
            oracle = "skipped" if case.oracle_match is None else str(case.oracle_match)
            print(
                f"{status} {case.space.label()} lambda={case.lam.to_text()} "
                f"value={case.residue.render('t')}{extras} oracle={oracle}",
                file=out,
            )
        for n, constant in sorted(report.og_even_constants().items()):
            print(f"og-even constant n={n}: {constant} (= 2^(n-1), not 2^n)", file=out)
        verdict = "PASS" if report.all_ok else "FAIL"
        print(f"result: {verdict} ({len(report.cases)} cases)", file=out)
    return EXIT_OK if report.all_ok else EXIT_MISMATCH


def _cmd_table(args, out) -> int:
    space = Space(SpaceKind(args.space), args.n)
    rows = table_rows(space, args.weight_max)
    fields = ["space", "n", "lambda", "mu", "constant", "value"]
    if args.format == "json":
        print(json.dumps({"command": "table", "rows": rows}, indent=2), file=out)
    else:
        buffer = io.StringIO()
        writer = csv.DictWriter(
            buffer, fieldnames=fields, lineterminator="\n", extrasaction="ignore"
        )
        writer.writeheader()
        writer.writerows(rows)
        out.write(buffer.getvalue())
    return EXIT_OK


_DISPATCH = {
    "pushforward": _cmd_pushforward,
    "schur": _cmd_schur,
    "verify": _cmd_verify,
    "table": _cmd_table,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args, sys.stdout)
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except GysinError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
