"""Command-line interface.

Subcommands: triangle (emit rows of one of the six triangles), poly (emit
one polynomial from the R/T/P/Q families), tan (evaluate tan(n*x) exactly
from t = tan(x)), verify (run the identity suites).

Exit codes: 0 success or all checks pass, 1 verification disagreement,
2 usage error. Output for fixed arguments is byte-identical across runs;
every number is printed as an exact decimal string. The bfile format is
one "index value" pair per line with a single space, indices starting at
1, triangles flattened row by row from the left.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import multiangle, symbolic, triangles, verify
from .exact import Rational

_TRIANGLES = {
    # name: (row function, first row index, row cap)
    "R": (triangles.r_row, 0, None),
    "T": (triangles.t_row, 0, None),
    "M": (triangles.m_row, 0, 60),
    "N": (triangles.n_row, 0, 60),
    "Rtilde": (triangles.tilde_r_row, 1, None),
    "Ttilde": (triangles.tilde_t_row, 1, None),
}

_FAMILIES = {
    # family: (polynomial function, smallest valid index)
    "R": (symbolic.r_poly_closed, 1),
    "T": (symbolic.t_poly_closed, 1),
    "P": (symbolic.hoffman_p, 0),
    "Q": (symbolic.hoffman_q, 0),
}


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _cmd_triangle(args: argparse.Namespace) -> int:
    row_fn, first, cap = _TRIANGLES[args.name]
    if args.rows < 1:
        return _usage_error("--rows must be at least 1")
    if cap is not None and args.rows > cap:
        return _usage_error(f"--rows is capped at {cap} for {args.name}")
    rows = [row_fn(n) for n in range(first, first + args.rows)]
    if args.format == "table":
        print("\n".join(" ".join(str(v) for v in row) for row in rows))
    elif args.format == "csv":
        print("\n".join(",".join(str(v) for v in row) for row in rows))
    elif args.format == "bfile":
        flat = [v for row in rows for v in row]
        print("\n".join(f"{i} {v}" for i, v in enumerate(flat, start=1)))
    else:
        doc = {
            "name": args.name,
            "first_row": first,
            "rows": [[str(v) for v in row] for row in rows],
        }
        print(json.dumps(doc))
    return 0


def _cmd_poly(args: argparse.Namespace) -> int:
    poly_fn, min_n = _FAMILIES[args.family]
    if args.n < min_n:
        return _usage_error(f"--n must be at least {min_n} for family {args.family}")
    poly = poly_fn(args.n)
    if args.format == "table":
        print(poly)
    elif args.format == "csv":
        print("\n".join(f"{a},{c}" for a, c in poly.terms()))
    else:
        print(json.dumps(poly.serialize()))
    return 0


def _cmd_tan(args: argparse.Namespace) -> int:
    if args.n < 0:
        return _usage_error("--n must be nonnegative")
    try:
        t = Rational.parse(args.t)
    except (ValueError, ZeroDivisionError):
        return _usage_error(f"--t must be an exact rational like 3/7, got {args.t!r}")
    if args.method != "all":
        print(multiangle.METHODS[args.method](args.n, t))
        return 0
    values = {name: fn(args.n, t) for name, fn in multiangle.METHODS.items()}
    for name, value in values.items():
        print(f"{name}: {value}")
    agree = len(set(values.values())) == 1
    print(f"agree: {'yes' if agree else 'no'}")
    return 0 if agree else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.max_n < 1:
        return _usage_error("--max-n must be at least 1")
    names = verify.SUITE_NAMES if args.suite == "all" else (args.suite,)
    reports = [verify.run_suite(name, args.max_n) for name in names]
    all_pass = all(report.passed for report in reports)
    if args.json:
        doc = {"pass": all_pass, "reports": [report.to_dict() for report in reports]}
        print(json.dumps(doc, indent=2))
    else:
        for report in reports:
            print(report.summary())
            for record in report.failures:
                print("  " + " ".join(f"{key}={value}" for key, value in record.items()))
    return 0 if all_pass else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tanpoly",
        description="Exact tangent multiple-angle triangles, polynomial families, and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_tri = sub.add_parser("triangle", help="emit rows of one coefficient triangle")
    p_tri.add_argument("--name", required=True, choices=sorted(_TRIANGLES))
    p_tri.add_argument("--rows", required=True, type=int, help="number of rows to emit")
    p_tri.add_argument("--format", default="table", choices=["table", "bfile", "csv", "json"])
    p_tri.set_defaults(func=_cmd_triangle)

    p_poly = sub.add_parser("poly", help="emit one polynomial from a family")
    p_poly.add_argument("--family", required=True, choices=sorted(_FAMILIES))
    p_poly.add_argument("--n", required=True, type=int, help="index within the family")
    p_poly.add_argument("--format", default="table", choices=["table", "csv", "json"])
    p_poly.set_defaults(func=_cmd_poly)

    p_tan = sub.add_parser("tan", help="evaluate tan(n*x) exactly from t = tan(x)")
    p_tan.add_argument("--n", required=True, type=int)
    p_tan.add_argument("--t", required=True, help="rational value of tan(x), e.g. 3/7 or -2")
    p_tan.add_argument("--method", default="all", choices=sorted(multiangle.METHODS) + ["all"])
    p_tan.set_defaults(func=_cmd_tan)

    p_ver = sub.add_parser("verify", help="run identity verification suites")
    p_ver.add_argument("--suite", required=True, choices=list(verify.SUITE_NAMES) + ["all"])
    p_ver.add_argument("--max-n", dest="max_n", type=int, default=12)
    p_ver.add_argument("--json", action="store_true", help="emit the report as JSON")
    p_ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help; keep main()
        # returning an int so callers and tests never see SystemExit.
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
