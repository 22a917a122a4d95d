"""Command-line frontend.

Subcommands: cases, table, verify, norms, kernel, matcoef, gram.
All fractions are serialized as "num/den" strings, never floats, so the
output is byte-deterministic.  Exit codes: 0 success, 1 verification or
consistency failure, 2 invalid input.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from fractions import Fraction

from . import bundles, hyperg, ladder, models
from .jordan import UnknownCaseError, lookup_case, sweep_case_ids

Q = Fraction

TABLE_FIELDS = ("case_id", "twist", "r0", "a", "b", "valid",
                "vacuum_label", "alpha", "pi1_order")


def frac(x) -> str:
    if x is None:
        return "*"
    x = Q(x)
    return f"{x.numerator}/{x.denominator}"


def table_rows(case_ids) -> list:
    rows = []
    for cid in case_ids:
        case = lookup_case(cid)
        pi1 = bundles.pi1_component_order(case)
        for bm in bundles.classify_bundles(case):
            rows.append({
                "case_id": cid,
                "twist": bm.twist,
                "r0": frac(bm.r0),
                "a": frac(bm.a),
                "b": frac(bm.b),
                "valid": bool(bm.valid),
                "vacuum_label": bm.vacuum_label,
                "alpha": bm.alpha,
                "pi1_order": pi1,
            })
    return rows


def emit_table(rows, fmt: str, fields=TABLE_FIELDS, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    elif fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            writer.writerow([_csv_cell(row[f]) for f in fields])
    else:
        if not rows:
            out.write("(no rows)\n")
            return
        widths = [max(len(str(f)), max(len(_csv_cell(r[f])) for r in rows))
                  for f in fields]
        out.write("  ".join(f.ljust(w) for f, w in zip(fields, widths)).rstrip() + "\n")
        for row in rows:
            out.write("  ".join(_csv_cell(row[f]).ljust(w)
                                for f, w in zip(fields, widths)).rstrip() + "\n")


def _csv_cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _find_bundle(case, twist):
    for bm in bundles.classify_bundles(case):
        if bm.twist == twist:
            return bm
    raise UnknownCaseError(f"case {case.id} has no {twist} bundle")


def _cmd_cases(args) -> int:
    entries = [lookup_case(cid).to_dict()
               for cid in sweep_case_ids(args.pmax, args.nmax)]
    if args.format == "json":
        print(json.dumps(entries, indent=2))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["id", "blocks", "m", "G"])
        for e in entries:
            writer.writerow([e["id"],
                             " ".join("/".join(map(str, b)) for b in e["blocks"]),
                             e["m"], e["labels"]["G"]])
    else:
        for e in entries:
            blocks = " ".join("(q=%d,d=%d,w=%d)" % tuple(b) for b in e["blocks"])
            print(f"{e['id']:10s} m={e['m']:<3d} {blocks}  [{e['labels']['G']}]")
    return 0


def _cmd_table(args) -> int:
    if args.case:
        ids = [args.case]
    else:
        ids = sweep_case_ids(args.pmax, args.nmax)
    rows = table_rows(ids)
    if args.case and not rows:
        print(f"{args.case}: no half-form bundle", file=sys.stderr)
    emit_table(rows, args.format)
    return 0


def _parse_model(name: str):
    if name in ("so44", "g2"):
        return models.build_model(name)
    if name.startswith("osc"):
        return models.build_model("oscillator", int(name[3:] or "1"))
    raise UnknownCaseError(f"unknown model {name!r} (use so44, g2, oscN)")


def _cmd_verify(args) -> int:
    model = _parse_model(args.model)
    report = models.verify_brackets(model, args.levels)
    status = {
        "model": args.model,
        "operators": len(model.algebra_ops),
        "rank": report.rank,
        "closed": report.closed,
        "independent": report.independent,
        "stable": report.stable,
        "sl2_ok": report.sl2_ok,
        "failures": report.failures,
    }
    if args.format == "json":
        print(json.dumps(status, indent=2))
    else:
        word = "closed" if report.closed else "NOT closed"
        print(f"{args.model}: {word} rank {report.rank}"
              f" stable={str(report.stable).lower()}"
              f" sl2={str(report.sl2_ok).lower()}")
        for pair in report.failures:
            print(f"  bracket escapes span: {pair[0]}, {pair[1]}")
    ok = report.closed and report.stable and report.sl2_ok
    return 0 if ok else 1


def _cmd_norms(args) -> int:
    case = lookup_case(args.case)
    bm = _find_bundle(case, args.twist)
    if not bm.valid:
        print(f"{args.case} {args.twist}: construction fails; no norms",
              file=sys.stderr)
        return 1
    gammas, _ = ladder.ladder_norms(case, bm.r0, bm.a, bm.b, args.n)
    rows = []
    norm = Q(1)
    fact = 1
    for k, g in enumerate(gammas, start=1):
        norm *= g
        fact *= k
        rows.append({"k": k, "gamma": frac(g), "norm": frac(norm / (fact * fact))})
    emit_table(rows, args.format, fields=("k", "gamma", "norm"))
    return 0


def _cmd_kernel(args) -> int:
    case = lookup_case(args.case)
    bm = _find_bundle(case, args.twist)
    if not bm.valid:
        print(f"{args.case} {args.twist}: construction fails; no kernel",
              file=sys.stderr)
        return 1
    ps = hyperg.kernel_coefficients(bm.r0, bm.a, bm.b, args.terms)
    rows = [{"n": n, "p_n": frac(p)} for n, p in enumerate(ps)]
    emit_table(rows, args.format, fields=("n", "p_n"))
    return 0


def _cmd_matcoef(args) -> int:
    case = lookup_case(args.case)
    bm = _find_bundle(case, args.twist)
    if not bm.valid:
        print(f"{args.case} {args.twist}: construction fails", file=sys.stderr)
        return 1
    yf = math.sinh(args.t) ** 2
    if yf >= 1:
        print(f"|sinh^2 t| = {yf} >= 1: series not applicable", file=sys.stderr)
        return 2
    y = Q(yf)  # exact value of the binary float
    conv_bound = Q(4 * math.ulp(yf)) if yf else Q(0)
    value, tail = hyperg.matrix_coefficient(bm.r0, bm.a, bm.b, y, args.terms)
    payload = {
        "case_id": args.case,
        "twist": args.twist,
        "t": args.t,
        "y_surrogate": frac(y),
        "y_conversion_bound": frac(conv_bound),
        "partial_sum": frac(value),
        "remainder_bound": frac(tail) if tail is not None else None,
        "terms": args.terms,
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")
    return 0


def _cmd_gram(args) -> int:
    model = _parse_model(args.model)
    report = models.solve_gram(model, args.levels)
    ok = (report.well_defined and report.symmetric
          and report.positive_definite and report.adjoint_ok)
    hw_norms = [frac(models.model_hw_norm(model, n, report))
                for n in range(args.levels + 1)] if ok else []
    payload = {
        "model": args.model,
        "levels": args.levels,
        "well_defined": report.well_defined,
        "symmetric": report.symmetric,
        "positive_definite": report.positive_definite,
        "adjoint_ok": report.adjoint_ok,
        "hw_norms": hw_norms,
        "failures": report.failures,
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"{args.model}: well_defined={str(report.well_defined).lower()}"
              f" symmetric={str(report.symmetric).lower()}"
              f" positive_definite={str(report.positive_definite).lower()}"
              f" adjoint_ok={str(report.adjoint_ok).lower()}")
        for n, h in enumerate(hw_norms):
            print(f"  level {n}: hw norm {h}")
        for f in report.failures:
            print(f"  failure: {f}")
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orbit",
                                     description="exact spectral data and model "
                                                 "verification for minimal-orbit "
                                                 "quantizations")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("json", "csv", "text"),
                       default="text")

    p = sub.add_parser("cases", help="dump the case registry")
    p.add_argument("--pmax", type=int, default=12)
    p.add_argument("--nmax", type=int, default=12)
    add_format(p)
    p.set_defaults(func=_cmd_cases)

    p = sub.add_parser("table", help="bundle/spectral table")
    p.add_argument("--case", help="single case id (default: full sweep)")
    p.add_argument("--all", action="store_true", help="full sweep (default)")
    p.add_argument("--pmax", type=int, default=12)
    p.add_argument("--nmax", type=int, default=12)
    add_format(p)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="bracket closure for a shipped model")
    p.add_argument("--model", required=True)
    p.add_argument("--levels", type=int, default=3)
    add_format(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("norms", help="rung scalars and squared norms")
    p.add_argument("--case", required=True)
    p.add_argument("--twist", default="L0", choices=("L0", "f0L0"))
    p.add_argument("--n", type=int, default=8)
    add_format(p)
    p.set_defaults(func=_cmd_norms)

    p = sub.add_parser("kernel", help="reproducing-kernel coefficients")
    p.add_argument("--case", required=True)
    p.add_argument("--twist", default="L0", choices=("L0", "f0L0"))
    p.add_argument("--terms", type=int, default=10)
    add_format(p)
    p.set_defaults(func=_cmd_kernel)

    p = sub.add_parser("matcoef", help="matrix coefficient partial sum")
    p.add_argument("--case", required=True)
    p.add_argument("--twist", default="L0", choices=("L0", "f0L0"))
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--terms", type=int, default=20)
    add_format(p)
    p.set_defaults(func=_cmd_matcoef)

    p = sub.add_parser("gram", help="invariant Gram recursion for a model")
    p.add_argument("--model", required=True)
    p.add_argument("--levels", type=int, default=2)
    add_format(p)
    p.set_defaults(func=_cmd_gram)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UnknownCaseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
