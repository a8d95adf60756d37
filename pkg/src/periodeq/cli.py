"""Command-line interface and the CSV/JSON wire formats.

Exit codes: 0 success, 2 invalid input, 3 verification mismatch,
4 internal arithmetic contradiction (a bug, not a property of the input).

Serialized integers that can exceed 64 bits (k, k^2, coefficients) are
written as decimal strings in JSON; CSV packs the coefficient vector,
highest degree first, into one space-separated quoted field.  Both formats
round-trip byte for byte.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .intpoly import (
    IntPoly,
    NotSelfReciprocal,
    NotSquarefree,
    OddDegree,
    Signature,
    cyclotomic_prime,
    demoivre_reduce,
    demoivre_unfold,
)
from .monogeneity import (
    ClassificationRecord,
    FieldDiscriminant,
    MatchKind,
    NotDivisible,
    NotPerfectSquare,
    classify,
)
from .number_theory import CompositeP, InvalidContext, is_prime, make_context
from .periods import (
    NonIntegerCoefficient,
    period_polynomial_exact,
    period_polynomial_modular,
)
from .reference_table import TABLE_ROWS, ReferenceRow
from .scanner import (
    ScanFailure,
    ScanMode,
    ScanReport,
    ScanSpec,
    cubic_growth,
    doublet_survey,
    fast_doublet_candidates,
    scan,
)

CSV_HEADER = "e,f,p,g,n_real,delta_sign,delta_exponent,k_squared,k,monogenic,match_kind,coeffs"


# -- record serialization ----------------------------------------------


def record_to_csv_line(rec: ClassificationRecord) -> str:
    coeffs = " ".join(str(c) for c in rec.psi.high_to_low())
    return (
        f"{rec.e},{rec.f},{rec.p},{rec.g},{rec.signature.n_real},"
        f"{rec.field_discriminant.sign},{rec.field_discriminant.exponent},"
        f"{rec.k_squared},{rec.k},{'true' if rec.monogenic else 'false'},"
        f'{rec.match_kind.value},"{coeffs}"'
    )


def records_to_csv(records) -> str:
    lines = [CSV_HEADER]
    lines.extend(record_to_csv_line(r) for r in records)
    return "\n".join(lines) + "\n"


def _record_from_fields(
    e: int,
    f: int,
    p: int,
    g: int,
    n_real: int,
    delta_sign: int,
    delta_exponent: int,
    k_squared: int,
    k: int,
    monogenic: bool,
    match_kind: str,
    coeffs_high_to_low,
) -> ClassificationRecord:
    delta = FieldDiscriminant(sign=delta_sign, p=p, exponent=delta_exponent)
    return ClassificationRecord(
        e=e,
        f=f,
        p=p,
        g=g,
        psi=IntPoly.from_high_to_low(coeffs_high_to_low),
        poly_discriminant=k_squared * delta.value(),
        field_discriminant=delta,
        k_squared=k_squared,
        k=k,
        monogenic=monogenic,
        signature=Signature(n_real=n_real, n_complex_pairs=(e - n_real) // 2),
        match_kind=MatchKind(match_kind),
    )


def parse_csv_records(text: str) -> list[ClassificationRecord]:
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    if not rows or ",".join(rows[0]) != CSV_HEADER:
        raise ValueError("missing or malformed CSV header")
    out = []
    for row in rows[1:]:
        if not row:
            continue
        e, f, p, g, n_real, ds, dx, k2, k = (int(v) for v in row[:9])
        monogenic = {"true": True, "false": False}[row[9]]
        out.append(
            _record_from_fields(
                e, f, p, g, n_real, ds, dx, k2, k, monogenic, row[10],
                [int(v) for v in row[11].split()],
            )
        )
    return out


def record_to_json_dict(rec: ClassificationRecord) -> dict:
    return {
        "e": rec.e,
        "f": rec.f,
        "p": rec.p,
        "g": rec.g,
        "n_real": rec.signature.n_real,
        "delta_sign": rec.field_discriminant.sign,
        "delta_exponent": rec.field_discriminant.exponent,
        "k_squared": str(rec.k_squared),
        "k": str(rec.k),
        "monogenic": rec.monogenic,
        "match_kind": rec.match_kind.value,
        "coeffs": [str(c) for c in rec.psi.high_to_low()],
    }


def record_from_json_dict(d: dict) -> ClassificationRecord:
    return _record_from_fields(
        d["e"],
        d["f"],
        d["p"],
        d["g"],
        d["n_real"],
        d["delta_sign"],
        d["delta_exponent"],
        int(d["k_squared"]),
        int(d["k"]),
        d["monogenic"],
        d["match_kind"],
        [int(v) for v in d["coeffs"]],
    )


def report_to_json(report: ScanReport) -> str:
    obj = {
        "spec": {
            "e_min": report.spec.e_min,
            "e_max": report.spec.e_max,
            "p_bound": report.spec.p_bound,
            "mode": report.spec.mode.value,
        },
        "records": [record_to_json_dict(r) for r in report.records],
        "missing_e": list(report.missing_e),
        "doublets": list(report.doublets),
        "counterexamples": [record_to_json_dict(r) for r in report.counterexamples],
    }
    return json.dumps(obj, indent=2) + "\n"


def report_from_json(text: str) -> ScanReport:
    obj = json.loads(text)
    spec = ScanSpec(
        e_min=obj["spec"]["e_min"],
        e_max=obj["spec"]["e_max"],
        p_bound=obj["spec"]["p_bound"],
        mode=ScanMode(obj["spec"]["mode"]),
    )
    records = tuple(record_from_json_dict(d) for d in obj["records"])
    mono: dict[int, list[int]] = {e: [] for e in range(spec.e_min, spec.e_max + 1)}
    for rec in records:
        if rec.monogenic:
            mono[rec.e].append(rec.f)
    return ScanReport(
        spec=spec,
        records=records,
        monogenic_map={e: tuple(sorted(fs)) for e, fs in mono.items()},
        missing_e=tuple(obj["missing_e"]),
        doublets=tuple(obj["doublets"]),
        counterexamples=tuple(record_from_json_dict(d) for d in obj["counterexamples"]),
    )


# -- reference table verification --------------------------------------


def verify_reference_rows(rows=None) -> list[tuple[ReferenceRow, bool, str]]:
    """Recompute each pinned row from scratch; returns (row, ok, detail)."""
    results = []
    for row in TABLE_ROWS if rows is None else rows:
        rec = classify(make_context(row.e, row.f))
        problems = []
        if rec.psi.high_to_low() != row.coeffs_high_to_low:
            problems.append("coefficients differ")
        if rec.signature.n_real != row.n_real:
            problems.append(
                f"n_real {rec.signature.n_real} != {row.n_real}"
            )
        if rec.poly_discriminant != row.expected_discriminant():
            problems.append("discriminant differs")
        if not rec.monogenic:
            problems.append(f"k = {rec.k}, expected 1")
        if rec.match_kind is MatchKind.NO_MATCH:
            problems.append("no cyclotomic match")
        results.append((row, not problems, "; ".join(problems) or "ok"))
    return results


# -- subcommands --------------------------------------------------------


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_psi(args) -> int:
    ctx = make_context(args.e, args.f)
    build = period_polynomial_exact if args.engine == "exact" else period_polynomial_modular
    poly = build(ctx).poly
    if args.format == "text":
        print(poly.to_str())
    elif args.format == "csv":
        coeffs = " ".join(str(c) for c in poly.high_to_low())
        print("e,f,p,g,coeffs")
        print(f'{ctx.e},{ctx.f},{ctx.p},{ctx.g},"{coeffs}"')
    else:
        print(
            json.dumps(
                {
                    "e": ctx.e,
                    "f": ctx.f,
                    "p": ctx.p,
                    "g": ctx.g,
                    "coeffs": [str(c) for c in poly.high_to_low()],
                },
                indent=2,
            )
        )
    return 0


def cmd_classify(args) -> int:
    rec = classify(make_context(args.e, args.f))
    if args.format == "text":
        delta = rec.field_discriminant
        sign = "-" if delta.sign < 0 else "+"
        print(f"e={rec.e} f={rec.f} p={rec.p} g={rec.g}")
        print(f"psi = {rec.psi.to_str()}")
        print(f"poly discriminant D = {rec.poly_discriminant}")
        print(f"field discriminant = {sign}{delta.p}^{delta.exponent}")
        print(f"k^2 = {rec.k_squared}, k = {rec.k}")
        print(f"monogenic: {'yes' if rec.monogenic else 'no'}")
        print(
            f"signature: {rec.signature.n_real} real, "
            f"{rec.signature.n_complex_pairs} complex pairs"
        )
        print(f"match: {rec.match_kind.value}")
    elif args.format == "csv":
        print(records_to_csv([rec]), end="")
    else:
        print(json.dumps(record_to_json_dict(rec), indent=2))
    return 0


def cmd_reduce(args) -> int:
    print(demoivre_reduce(cyclotomic_prime(args.p)).to_str())
    return 0


def cmd_unfold(args) -> int:
    poly = period_polynomial_modular(make_context(args.e, args.f)).poly
    unfolded = demoivre_unfold(poly)
    print(unfolded.to_str())
    q = 2 * args.e + 1
    if is_prime(q) and unfolded == cyclotomic_prime(q):
        print(f"matches the cyclotomic polynomial of {q}", file=sys.stderr)
    return 0


def _parse_e_range(text: str) -> tuple[int, int]:
    if ":" in text:
        lo, hi = text.split(":", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def cmd_scan(args) -> int:
    e_min, e_max = _parse_e_range(args.e_range)
    spec = ScanSpec(
        e_min=e_min,
        e_max=e_max,
        p_bound=args.p_bound,
        mode=ScanMode(args.mode),
        worker_count=args.workers,
    )
    report = scan(spec)
    if args.format == "csv":
        _emit(records_to_csv(report.records), args.output)
    elif args.format == "json":
        _emit(report_to_json(report), args.output)
    else:
        lines = [
            f"scanned e in [{spec.e_min}, {spec.e_max}], p <= {spec.p_bound}, "
            f"mode={spec.mode.value}: {len(report.records)} pairs",
            f"monogenic pairs: {sum(1 for r in report.records if r.monogenic)}",
            f"missing e: {' '.join(map(str, report.missing_e)) or 'none'}",
            f"doublets: {' '.join(map(str, report.doublets)) or 'none'}",
            f"counterexamples: {len(report.counterexamples)}",
        ]
        _emit("\n".join(lines) + "\n", args.output)
    if report.counterexamples:
        for rec in report.counterexamples:
            print(
                f"counterexample: e={rec.e} f={rec.f} p={rec.p} "
                f"k={rec.k} match={rec.match_kind.value}",
                file=sys.stderr,
            )
        return 3
    return 0


def cmd_doublets(args) -> int:
    mode = ScanMode.FULL if args.mode == "full" else ScanMode.FAST_DOUBLET
    found = doublet_survey(args.e_max, mode=mode, e_min=args.e_min, worker_count=args.workers)
    print(" ".join(map(str, found)))
    print(f"count for {args.e_min} <= e <= {args.e_max}: {len(found)}")
    if args.e_min > 2:
        wide = fast_doublet_candidates(2, args.e_max)
        print(f"count for 2 <= e <= {args.e_max}: {len(wide)}", file=sys.stderr)
    return 0


def cmd_cubic_growth(args) -> int:
    report = cubic_growth(args.p_bound, worker_count=args.workers)
    print(f"e=3, p = 3f + 1 <= {report.p_bound}: {report.total_pairs} pairs, "
          f"{report.monogenic_total} monogenic")
    for bound, count in report.checkpoints:
        print(f"p <= {bound}: {count} monogenic")
    if report.slope is not None:
        print(f"log-log slope: {report.slope:.4f}")
    else:
        print("log-log slope: undefined (not enough checkpoints)")
    return 0


def cmd_table1(args) -> int:
    results = verify_reference_rows()
    failures = 0
    for row, ok, detail in results:
        status = "PASS" if ok else f"FAIL ({detail})"
        print(f"e={row.e:<3d} p={row.p:<3d} {status}")
        if not ok:
            failures += 1
    print(f"{len(results)} rows checked, {len(results) - failures} pass, {failures} fail")
    return 3 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="periodeq",
        description="Exact Gaussian period equations and monogeneity surveys",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, default="text", choices=("text", "csv", "json")):
        p.add_argument("--format", default=default, choices=choices)

    p = sub.add_parser("psi", help="construct one period polynomial")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.add_argument("--engine", default="modular", choices=("modular", "exact"))
    add_format(p)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("classify", help="classify one (e, f) pair")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reduce", help="halve the p-th cyclotomic polynomial via x + 1/x")
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("unfold", help="unfold a period polynomial through x + 1/x")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--f", type=int, required=True)
    p.set_defaults(func=cmd_unfold)

    p = sub.add_parser("scan", help="survey a rectangle of (e, f) pairs")
    p.add_argument("--e-range", required=True, help="e.g. 4:60")
    p.add_argument("--p-bound", type=int, required=True)
    p.add_argument("--mode", default="full", choices=[m.value for m in ScanMode])
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", default=None)
    add_format(p, default="csv")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("doublets", help="e where both f=1 and f=2 are monogenic")
    p.add_argument("--e-max", type=int, required=True)
    p.add_argument("--e-min", type=int, default=4)
    p.add_argument("--mode", default="fast", choices=("fast", "full"))
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_doublets)

    p = sub.add_parser("cubic-growth", help="monogenic growth curve for e = 3")
    p.add_argument("--p-bound", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_cubic_growth)

    p = sub.add_parser("table1", help="regenerate and verify the reference table")
    p.set_defaults(func=cmd_table1)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CompositeP, InvalidContext, NotSelfReciprocal, OddDegree) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        NotDivisible,
        NotPerfectSquare,
        NonIntegerCoefficient,
        NotSquarefree,
        ScanFailure,
    ) as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        return 4
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
