"""Command-line interface.

Subcommands: list, delta, scan, closed-form, verify, table, threefold.
Rationals are read and written exclusively in the canonical "p/q" form; no
floating-point input path exists.  Exit codes: 0 success, 1 verification
mismatch, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import threefold, verify
from .catalog import (
    CASES,
    DegreeNotAdmissible,
    UnknownCase,
    get_case,
    list_cases,
)
from .delta import (
    DeltaReport,
    delta_closed_form,
    delta_point,
    expected_closed_form,
    s_curve_on_plane,
)
from .exact import NoFit, rat_str

SCHEMA_VERSION = 1

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class InputError(ValueError):
    """Invalid command-line input; reported on stderr with exit code 2."""


def parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text.strip()):
        raise InputError(f"expected an exact rational 'p/q', got {text!r}")
    return Fraction(text.strip())


# ---------------------------------------------------------------------------
# Record rendering
# ---------------------------------------------------------------------------


def _render(records: list[dict], columns: list[str], fmt: str, out) -> None:
    if fmt == "json":
        payload = {"schema_version": SCHEMA_VERSION, "records": records}
        json.dump(payload, out, indent=2)
        out.write("\n")
        return
    rows = [[str(rec.get(c, "")) for c in columns] for rec in records]
    if fmt == "csv":
        import csv as _csv

        writer = _csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)
    elif fmt == "md":
        out.write("| " + " | ".join(columns) + " |\n")
        out.write("|" + "|".join(" --- " for _ in columns) + "|\n")
        for row in rows:
            out.write("| " + " | ".join(row) + " |\n")
    elif fmt == "latex":
        out.write("\\begin{tabular}{" + "l" * len(columns) + "}\n\\hline\n")
        out.write(" & ".join(columns) + " \\\\\n\\hline\n")
        for row in rows:
            out.write(" & ".join(cell.replace("λ", "$\\lambda$") for cell in row) + " \\\\\n")
        out.write("\\hline\n\\end{tabular}\n")
    elif fmt == "plain":
        widths = [max(len(c), *(len(r[i]) for r in rows)) if rows else len(c) for i, c in enumerate(columns)]
        out.write("  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip() + "\n")
        for row in rows:
            out.write("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() + "\n")
    else:
        raise InputError(f"unknown format {fmt!r}")


def _report_record(rep: DeltaReport) -> dict:
    # the multiplicity clause for an l-fold line component, reported alongside
    # the case-specific value whenever the configuration carries one
    spec = get_case(rep.case_id)
    clause = ""
    for cb in spec.extra_upper_bounds:
        if cb.e == 1 and cb.l >= 2:
            s_b, a_b = s_curve_on_plane(rep.d, rep.lam, cb.e, cb.l)
            clause = rat_str(a_b / s_b)
    return {
        "case": rep.case_id,
        "d": rep.d,
        "lambda": rat_str(rep.lam),
        "delta": rat_str(rep.upper_bound if rep.exact else rep.lower_bound),
        "exact": rep.exact,
        "lower": rat_str(rep.lower_bound),
        "upper": rat_str(rep.upper_bound),
        "minimizer": ";".join(rep.minimizers),
        "validity": rep.validity_ok,
        "expected": "" if rep.expected is None else rat_str(rep.expected),
        "match": "" if rep.matches_expected is None else rep.matches_expected,
        "line_clause": clause,
        "note": rep.note,
    }


_REPORT_COLUMNS = [
    "case", "d", "lambda", "delta", "exact", "lower", "upper",
    "minimizer", "validity", "expected", "match", "line_clause", "note",
]


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _case_payload(spec) -> dict:
    """Full JSON export of one catalog entry; rationals as canonical strings."""
    return {
        "id": spec.id,
        "label": spec.label,
        "order": spec.order,
        "degrees": list(spec.degrees),
        "curves": list(spec.model.curves),
        "gram": [[rat_str(x) for x in row] for row in spec.model.gram],
        "ambient_self": rat_str(spec.model.ambient_self),
        "ambient_pairings": [rat_str(x) for x in spec.model.ambient_pairings],
        "m_L": None if spec.m_L is None else rat_str(spec.m_L),
        "m_C": rat_str(spec.m_C),
        "k_E": rat_str(spec.k_E),
        "A": {"const": rat_str(spec.printed_A[0]), "lambda": rat_str(spec.printed_A[1])},
        "s_factor": rat_str(spec.s_factor),
        "tau_factor": rat_str(spec.tau_factor),
        "break_factors": [rat_str(b) for b in spec.break_factors],
        "variants": [
            {
                "name": var.name,
                "points": [
                    {
                        "label": pt.label,
                        "coeff": {"const": rat_str(pt.coeff[0]), "lambda": rat_str(pt.coeff[1])},
                        "location": pt.location,
                        "orbifold_order": pt.orbifold_order,
                    }
                    for pt in var.points
                ],
            }
            for var in spec.variants
        ],
        "extra_upper_bounds": [{"e": cb.e, "l": rat_str(cb.l)} for cb in spec.extra_upper_bounds],
        "rows": [
            {
                "d": row.d,
                "lo": rat_str(row.lo),
                "hi": rat_str(row.hi),
                "delta": expected_closed_form(spec, row.d).format("λ"),
                "delta_num": [rat_str(c) for c in row.delta_num],
                "delta_den": [rat_str(c) for c in row.delta_den],
            }
            for row in spec.rows
        ],
        "minimizers": list(spec.minimizers),
        "lower_regime_hi": None if spec.lower_regime_hi is None else rat_str(spec.lower_regime_hi),
        "alias_of": spec.alias_of,
    }


def cmd_list(args, out) -> int:
    if args.format == "json":
        specs = sorted(CASES.values(), key=lambda s: s.order)
        json.dump({"schema_version": SCHEMA_VERSION, "records": [_case_payload(s) for s in specs]}, out, indent=2)
        out.write("\n")
        return 0
    records = []
    for case_id, label, degrees, validity in list_cases():
        records.append(
            {
                "case": case_id,
                "label": label,
                "degrees": ";".join(str(d) for d in degrees),
                "validity": ";".join(f"d={d}:[{rat_str(lo)},{rat_str(hi)}]" for d, lo, hi in validity),
            }
        )
    _render(records, ["case", "label", "degrees", "validity"], args.format, out)
    return 0


def _resolve_case_degree(case_id: str, d: int):
    spec = get_case(case_id)
    if d not in spec.degrees:
        raise InputError(f"case {case_id} does not admit degree {d} (admissible: {spec.degrees})")
    return spec


def cmd_delta(args, out) -> int:
    spec = _resolve_case_degree(args.case, args.degree)
    lam = parse_rational(args.lam)
    if not (0 < lam and lam * args.degree < 3):
        raise InputError(f"lambda must lie in (0, 3/{args.degree})")
    rep = delta_point(spec, args.degree, lam)
    record = _report_record(rep)
    if args.format == "plain":
        out.write(f"case {rep.case_id} (d={rep.d}) at lambda={rat_str(rep.lam)}\n")
        out.write(f"  A(E) = {rat_str(rep.a_e)}   S(E) = {rat_str(rep.s_e)}   A/S = {rat_str(rep.a_e / rep.s_e)}\n")
        for row in rep.rows:
            tag = f"{row.variant}:{row.label}" if len(spec.variants) > 1 else row.label
            out.write(f"  point {tag:24s} A = {rat_str(row.a_value):8s} S = {rat_str(row.s_value):8s} A/S = {rat_str(row.ratio)}\n")
        if rep.exact:
            out.write(f"  delta = {rat_str(rep.upper_bound)} (exact), minimizer {record['minimizer']}\n")
        else:
            out.write(f"  delta >= {rat_str(rep.lower_bound)} (lower bound only; upper bound {rat_str(rep.upper_bound)})\n")
        if rep.expected is not None:
            out.write(f"  stated closed form value: {rat_str(rep.expected)} (match: {rep.matches_expected})\n")
        if rep.note:
            out.write(f"  note: {rep.note}\n")
    else:
        _render([record], _REPORT_COLUMNS, args.format, out)
    return 0


def cmd_scan(args, out) -> int:
    spec = _resolve_case_degree(args.case, args.degree)
    lo, hi = parse_rational(args.start), parse_rational(args.stop)
    if lo >= hi:
        raise InputError("scan range must satisfy start < stop")
    if args.samples < 2:
        raise InputError("need at least 2 samples")
    records = []
    for k in range(args.samples):
        lam = lo + (hi - lo) * Fraction(k, args.samples - 1)
        if lam < 0 or lam * args.degree >= 3:
            records.append(
                {
                    "case": spec.id,
                    "d": args.degree,
                    "lambda": rat_str(lam),
                    "delta": "",
                    "exact": "",
                    "lower": "",
                    "upper": "",
                    "minimizer": "",
                    "validity": False,
                    "expected": "",
                    "match": "",
                    "line_clause": "",
                    "note": "outside the log Fano range [0, 3/d)",
                }
            )
            continue
        records.append(_report_record(delta_point(spec, args.degree, lam)))
    _render(records, _REPORT_COLUMNS, args.format, out)
    return 0


def cmd_closed_form(args, out) -> int:
    spec = _resolve_case_degree(args.case, args.degree)
    try:
        rf = delta_closed_form(spec, args.degree, args.num_deg, args.den_deg)
    except NoFit as exc:
        raise InputError(f"no fit with bounds ({args.num_deg},{args.den_deg}): {exc}") from exc
    stated = expected_closed_form(spec, args.degree)
    row = spec.row(args.degree)
    record = {
        "case": spec.id,
        "d": args.degree,
        "delta": rf.format("λ"),
        "stated": stated.format("λ"),
        "match": rf == stated,
        "validity": f"[{rat_str(row.lo)},{rat_str(row.hi)}]",
    }
    _render([record], ["case", "d", "delta", "stated", "match", "validity"], args.format, out)
    return 0 if rf == stated else 1


def cmd_table(args, out) -> int:
    records = []
    rows = []
    for spec in CASES.values():
        for row in spec.rows:
            rows.append((row.d, spec.order, spec, row))
    for d, _, spec, row in sorted(rows, key=lambda r: (r[0], r[1])):
        records.append(
            {
                "case": spec.id,
                "label": spec.label,
                "d": d,
                "delta": expected_closed_form(spec, d).format("λ"),
                "validity": f"[{rat_str(row.lo)},{rat_str(row.hi)}]"
                + ("" if spec.lower_regime_hi is None else f" (>=3/(2(3-{d}λ)) on [0,{rat_str(spec.lower_regime_hi)}])"),
            }
        )
    _render(records, ["case", "label", "d", "delta", "validity"], args.format, out)
    return 0


def cmd_verify(args, out) -> int:
    ids = None if args.all else [args.case]
    if ids is not None:
        get_case(ids[0])
    checks, ok = verify.verify_all(case_ids=ids, jobs=args.jobs)
    for line in verify.summarize(checks):
        out.write(line + "\n")
    total = len(checks)
    failed = sum(1 for c in checks if not c.ok)
    out.write(f"{'OK' if ok else 'MISMATCH'}: {total - failed}/{total} checks passed\n")
    return 0 if ok else 1


def cmd_threefold(args, out) -> int:
    lam = parse_rational(args.lam)
    cone = get_case(args.cone)
    cone_degree = args.m if args.kind in ("blowup", "quadric") else args.s
    if cone_degree is None:
        raise InputError("missing --s/--m for the requested kind")
    if cone_degree not in cone.degrees:
        raise InputError(
            f"tangent-cone case {cone.id} has degrees {cone.degrees}, inconsistent with {cone_degree}"
        )
    delta2d, exact2d = threefold.tangent_cone_delta(cone.id, cone_degree, lam)
    if args.kind == "smooth":
        if args.s is None:
            raise InputError("kind 'smooth' needs --s")
        bound = threefold.delta_bound_smooth(args.s, lam, delta2d)
    elif args.kind == "blowup":
        if args.s is None or args.m is None:
            raise InputError("kind 'blowup' needs --s and --m")
        bound = threefold.delta_bound_blowup(args.s, args.m, lam, delta2d)
    else:
        if args.m is None:
            raise InputError("kind 'quadric' needs --m")
        bound = threefold.delta_bound_quadric(args.m, lam, delta2d)
    note = ""
    if bound == 1:
        note = "bound not strict"
    if not exact2d:
        note = (note + "; " if note else "") + "plane delta used as a lower bound"
    record = {
        "kind": args.kind,
        "s": "" if args.s is None else args.s,
        "m": "" if args.m is None else args.m,
        "lambda": rat_str(lam),
        "cone": cone.id,
        "delta2d": rat_str(delta2d),
        "bound": rat_str(bound),
        "k_stable_bound": "yes" if bound >= 1 else "no",
        "note": note,
    }
    _render([record], ["kind", "s", "m", "lambda", "cone", "delta2d", "bound", "k_stable_bound", "note"], args.format, out)
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # --format/--jobs are accepted both before and after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=["json", "csv", "md", "latex", "plain"], default=argparse.SUPPRESS
    )
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="parallel workers for verification")

    parser = argparse.ArgumentParser(
        prog="logfano",
        description="Exact delta invariants of log Fano pairs (P^2, lambda*C_d), d <= 4.",
    )
    parser.add_argument("--format", choices=["json", "csv", "md", "latex", "plain"], default="plain")
    parser.add_argument("--jobs", type=int, default=1, help="parallel workers for verification")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="enumerate catalog cases", parents=[common])

    p = sub.add_parser("delta", help="evaluate the local delta invariant at one lambda", parents=[common])
    p.add_argument("--case", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="P/Q")

    p = sub.add_parser("scan", help="evaluate delta on an even grid of rational lambdas", parents=[common])
    p.add_argument("--case", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--from", dest="start", required=True, metavar="P/Q")
    p.add_argument("--to", dest="stop", required=True, metavar="P/Q")
    p.add_argument("--samples", type=int, default=9)

    p = sub.add_parser("closed-form", help="reconstruct the closed form of delta(lambda)", parents=[common])
    p.add_argument("--case", required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--num-deg", type=int, default=2)
    p.add_argument("--den-deg", type=int, default=2)

    p = sub.add_parser("verify", help="verify the engine against every stated result", parents=[common])
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true")
    group.add_argument("--case")

    sub.add_parser("table", help="emit the full delta table, one row per case and degree", parents=[common])

    p = sub.add_parser("threefold", help="threefold delta lower bounds from plane data", parents=[common])
    p.add_argument("kind", choices=["smooth", "blowup", "quadric"])
    p.add_argument("--s", type=int, default=None, help="surface degree in P^3")
    p.add_argument("--m", type=int, default=None, help="point multiplicity")
    p.add_argument("--lambda", dest="lam", required=True, metavar="P/Q")
    p.add_argument("--cone", required=True, help="catalog id of the section / tangent-cone curve")

    return parser


_COMMANDS = {
    "list": cmd_list,
    "delta": cmd_delta,
    "scan": cmd_scan,
    "closed-form": cmd_closed_form,
    "verify": cmd_verify,
    "table": cmd_table,
    "threefold": cmd_threefold,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args, out)
    except (InputError, UnknownCase, DegreeNotAdmissible, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
