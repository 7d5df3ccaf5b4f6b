"""Command-line interface: compute, verify, roots, bench.

Exit codes: 0 success, 1 verification or cross-method consistency failure,
2 usage error.  JSON outputs are single documents with a stable key order;
CSV uses comma separators, newline endings, and no quoting (all fields are
numeric or bare identifiers).  Exact integers print in full decimal.
"""

from __future__ import annotations

import argparse
import json
import sys

import mpmath

from .bench import BenchRecord, bench_sweep
from .errors import (
    BenchConsistencyError,
    InternalInconsistencyError,
    TribmatError,
)
from .identities import (
    DEFAULT_BITS,
    IDENTITY_NAMES,
    VerificationReport,
    all_pass,
    verify,
    verify_all,
)
from .roots import Precision, cardano_roots, compute_roots
from .sequences import Seq, r_value, seq_range, seq_value

_PLAIN, _JSON, _CSV = "plain", "json", "csv"


def _parse_span(text: str) -> tuple[int, int]:
    lo_text, sep, hi_text = text.partition(":")
    if not sep:
        raise ValueError(f"range must look like lo:hi, got {text!r}")
    return int(lo_text), int(hi_text)


def _print_digits(bits: int) -> int:
    # full decimal content of the mantissa
    return max(17, int(bits * 0.30103) + 1)


def _nstr(x, bits: int) -> str:
    return mpmath.nstr(x, _print_digits(bits))


def report_as_dict(r: VerificationReport) -> dict:
    failure = None
    if r.first_failure is not None:
        failure = {
            "n": r.first_failure.index,
            "expected": r.first_failure.expected,
            "actual": r.first_failure.actual,
        }
    return {
        "id": r.identity,
        "lo": r.lo,
        "hi": r.hi,
        "bits": r.precision_bits,
        "status": r.status,
        "checked": r.checked,
        "first_failure": failure,
    }


def reports_to_json(reports: list[VerificationReport]) -> str:
    return json.dumps({"reports": [report_as_dict(r) for r in reports]})


def _cmd_compute(args: argparse.Namespace) -> int:
    seq = Seq(args.seq)
    if (args.n is None) == (args.range is None):
        print("error: exactly one of --n and --range is required", file=sys.stderr)
        return 2
    if args.n is not None:
        lo = hi = args.n
    else:
        lo, hi = _parse_span(args.range)
    values = seq_range(seq, lo, hi)
    if args.format == _CSV:
        print("n,value")
        for n, value in zip(range(lo, hi + 1), values):
            print(f"{n},{value}")
    elif args.format == _JSON:
        doc = {
            "seq": seq.value,
            "values": [{"n": n, "value": v} for n, v in zip(range(lo, hi + 1), values)],
        }
        print(json.dumps(doc))
    else:
        for value in values:
            print(value)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if (args.id is None) == (not args.all):
        print("error: exactly one of --id and --all is required", file=sys.stderr)
        return 2
    lo, hi = _parse_span(args.range)
    precision = Precision(args.bits)
    if args.all:
        reports = verify_all(lo, hi, precision)
    else:
        reports = [verify(args.id, lo, hi, precision)]
    if args.format == _JSON:
        print(reports_to_json(reports))
    else:
        for r in reports:
            bits = "-" if r.precision_bits is None else r.precision_bits
            line = (
                f"{r.identity:<20} [{r.lo}, {r.hi}] bits={bits} "
                f"checked={r.checked} {r.status.upper()}"
            )
            if r.first_failure is not None:
                line += (
                    f" (n={r.first_failure.index}: expected {r.first_failure.expected},"
                    f" got {r.first_failure.actual})"
                )
            if r.note:
                line += f"  [{r.note}]"
            print(line)
    return 0 if all_pass(reports) else 1


def _cmd_roots(args: argparse.Namespace) -> int:
    precision = Precision(args.bits)
    rs = compute_roots(precision)
    bits = precision.bits
    rows: list[tuple[str, str]] = [
        ("alpha", _nstr(rs.alpha, bits)),
        ("omega1", _nstr(rs.omega1, bits)),
        ("omega2", _nstr(rs.omega2, bits)),
        ("cubic_residual_bound", mpmath.nstr(rs.residual_bound, 8)),
    ]
    if args.power is not None:
        n = args.power
        k_n = seq_value(Seq.K, n)
        r_n = r_value(n)
        roots = cardano_roots(n, precision, k_n=k_n, r_n=r_n)
        rows += [
            ("n", str(n)),
            ("K_n", str(k_n)),
            ("R_n", str(r_n)),
            ("Delta_n", _nstr(roots.delta_n, bits)),
            ("A_n", _nstr(roots.a_n, bits)),
            ("B_n", _nstr(roots.b_n, bits)),
            ("y1", _nstr(roots.y1, bits)),
            ("y2", _nstr(roots.y2, bits)),
            ("y3", _nstr(roots.y3, bits)),
        ]
    if args.format == _JSON:
        print(json.dumps({"bits": bits, **dict(rows)}))
    elif args.format == _CSV:
        print("name,value")
        for name, value in rows:
            print(f"{name},{value.replace(' ', '')}")
    else:
        for name, value in rows:
            print(f"{name} = {value}")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    records = bench_sweep(args.max_exp)
    if args.format == _JSON:
        doc = {
            "records": [
                {
                    "method": r.method,
                    "n": r.n,
                    "wall_nanoseconds": r.wall_nanoseconds,
                    "digits": r.digits,
                }
                for r in records
            ]
        }
        print(json.dumps(doc))
    elif args.format == _CSV:
        print("method,n,wall_nanoseconds,digits")
        for r in records:
            print(f"{r.method},{r.n},{r.wall_nanoseconds},{r.digits}")
    else:
        for r in records:
            print(f"{r.method:<13} n={r.n:<9} {r.wall_nanoseconds:>14} ns  {r.digits} digits")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tribmat",
        description="Exact arithmetic for the Tribonacci family T, K, H",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="print exact sequence values")
    compute.add_argument("--seq", required=True, choices=[s.value for s in Seq])
    compute.add_argument("--n", type=int)
    compute.add_argument(
        "--range", metavar="LO:HI", help="index window; write --range=-5:10 for negative lo"
    )
    compute.add_argument("--format", default=_PLAIN, choices=[_PLAIN, _JSON, _CSV])
    compute.set_defaults(func=_cmd_compute)

    verify_p = sub.add_parser("verify", help="run identity verifications")
    verify_p.add_argument("--id", choices=list(IDENTITY_NAMES))
    verify_p.add_argument("--all", action="store_true")
    verify_p.add_argument(
        "--range", required=True, metavar="LO:HI",
        help="index window; write --range=-50:200 for negative lo",
    )
    verify_p.add_argument("--bits", type=int, default=DEFAULT_BITS)
    verify_p.add_argument("--format", default=_PLAIN, choices=[_PLAIN, _JSON])
    verify_p.set_defaults(func=_cmd_verify)

    roots_p = sub.add_parser("roots", help="print the characteristic roots")
    roots_p.add_argument("--bits", type=int, default=DEFAULT_BITS)
    roots_p.add_argument("--power", type=int, help="also solve for the n-th power's roots")
    roots_p.add_argument("--format", default=_PLAIN, choices=[_PLAIN, _JSON, _CSV])
    roots_p.set_defaults(func=_cmd_roots)

    bench_p = sub.add_parser("bench", help="equality-gated method timings")
    bench_p.add_argument("--max-exp", type=int, required=True, metavar="E")
    bench_p.add_argument("--format", default=_PLAIN, choices=[_PLAIN, _JSON, _CSV])
    bench_p.set_defaults(func=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    # exact outputs print in full decimal; lift CPython's conversion cap
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (BenchConsistencyError, InternalInconsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (TribmatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())
