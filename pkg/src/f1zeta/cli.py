"""``f1zeta`` command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 pole or singularity.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from . import arith
from .errors import DomainError, FanError, InternalCheckError, PoleError
from .euler import DEFAULT_TRUNCATION, euler_trace
from .poly import render as render_poly
from .registry import parse_scheme_spec, resolve_fan
from .scheme import counting_function, euler_characteristic
from .toric import check_fan_axiom, counting_function_fan, dimension_census
from .verify import SUITES
from .zeta import absolute_zeta, evaluate, zeta_from_counting

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_POLE = 0, 1, 2, 3
CLI_MAX_N = 10**6


def fmt_float(x: float) -> str:
    return f"{x:.10g}"


def fmt_complex(z: complex) -> str:
    if z.imag == 0:
        return fmt_float(z.real)
    return f"{z.real:.10g}{z.imag:+.10g}i"


def parse_s(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise DomainError(f"--s expects RE or RE,IM, got {text!r}")


def _emit(rows: list[tuple[str, str]], fmt: str, out, extra_json: dict | None = None) -> None:
    """Key/value report in one of the three output formats."""
    if fmt == "table":
        for key, value in rows:
            print(f"{key}: {value}", file=out)
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["field", "value"])
        w.writerows(rows)
    else:
        doc = dict(rows)
        doc.update(extra_json or {})
        print(json.dumps(doc, indent=2, ensure_ascii=False), file=out)


# --- subcommands -------------------------------------------------------------

def cmd_kappa(args, out) -> int:
    if not 1 <= args.n_max <= CLI_MAX_N:
        raise DomainError(f"n_max must be in 1..{CLI_MAX_N}, got {args.n_max}")
    values = arith.kappa_table(args.a, args.n_max)
    rows = [(n, k, "+" if k > 0 else "-" if k < 0 else "0") for n, k in enumerate(values, start=1)]
    if args.format == "json":
        doc = {"a": str(args.a), "rows": [{"n": n, "kappa": str(k), "sign": s} for n, k, s in rows]}
        print(json.dumps(doc, indent=2), file=out)
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "kappa", "sign"])
        w.writerows((n, str(k), s) for n, k, s in rows)
    else:
        nw = max(1, len(str(args.n_max)))
        kw = max(5, *(len(str(k)) for _, k, _ in rows))
        print(f"{'n':>{nw}}  {'kappa':>{kw}}  sign", file=out)
        for n, k, s in rows:
            print(f"{n:>{nw}}  {k:>{kw}}  {s}", file=out)
    return EXIT_OK


def cmd_counting(args, out) -> int:
    x = parse_scheme_spec(args.scheme)
    n = counting_function(x)
    deg = "-inf" if n.is_zero() else str(n.degree)
    if args.format == "table":
        print(f"N(t) = {render_poly(n)}", file=out)
        print(f"chi_abs = {euler_characteristic(x)}", file=out)
        print(f"deg = {deg}", file=out)
        return EXIT_OK
    rows = [
        ("scheme", args.scheme),
        ("counting_function", render_poly(n)),
        ("chi_abs", str(euler_characteristic(x))),
        ("deg", deg),
    ]
    _emit(rows, args.format, out, {"coefficients": [str(c) for c in n.coeffs]})
    return EXIT_OK


def cmd_zeta(args, out) -> int:
    x = parse_scheme_spec(args.scheme)
    via_tensor = absolute_zeta(x)
    via_counting = zeta_from_counting(counting_function(x))
    agree = "yes" if via_tensor == via_counting else "no"
    if args.s is None:
        result = str(via_tensor)
    else:
        result = fmt_complex(evaluate(via_tensor, parse_s(args.s)))
    if args.format == "table":
        print(result, file=out)
        print(f"constructions agree: {agree}", file=out)
    else:
        key = "factored" if args.s is None else "value"
        extra = {"multiset": [
            {"re": str(rho[0]), "im": str(rho[1]), "multiplicity": str(m)} for rho, m in via_tensor.entries
        ]}
        _emit([("scheme", args.scheme), (key, result), ("constructions_agree", agree)], args.format, out, extra)
    return EXIT_OK if agree == "yes" else EXIT_VERIFY


def cmd_euler(args, out) -> int:
    if args.s is None:
        raise DomainError("euler needs --s RE[,IM]")
    if not 1 <= args.truncate <= CLI_MAX_N:
        raise DomainError(f"--truncate must be in 1..{CLI_MAX_N}, got {args.truncate}")
    x = parse_scheme_spec(args.scheme)
    trace = euler_trace(x, parse_s(args.s), truncation=args.truncate)
    if args.trace:
        with open(args.trace, "w", newline="") as fh:
            trace.write_csv(fh)
    missing = "pole"
    rows = [
        ("verdict", trace.verdict_label()),
        ("final partial", fmt_complex(trace.final)),
        ("closed form", missing if trace.target is None else fmt_complex(trace.target)),
        ("abs error", missing if trace.abs_error is None else fmt_float(trace.abs_error)),
    ]
    if args.format != "table":
        rows = [(k.replace(" ", "_"), v) for k, v in rows]
    _emit(rows, args.format, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    checks = SUITES[args.suite](args.seed)
    failed = [c for c in checks if not c.ok]
    if args.format == "table":
        for c in checks:
            line = f"PASS  {c.name}" if c.ok else f"FAIL  {c.name}: {c.detail}"
            print(line, file=out)
        print(f"{args.suite}: {len(checks) - len(failed)}/{len(checks)} passed", file=out)
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["check", "status", "detail"])
        w.writerows((c.name, "pass" if c.ok else "fail", c.detail) for c in checks)
    else:
        doc = {"suite": args.suite, "seed": args.seed,
               "checks": [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in checks]}
        print(json.dumps(doc, indent=2), file=out)
    return EXIT_VERIFY if failed else EXIT_OK


def cmd_fan_info(args, out) -> int:
    fan = resolve_fan(args.fan)
    status = check_fan_axiom(fan) if args.strict else "not checked"
    n = counting_function_fan(fan)
    census = dimension_census(fan)
    if args.format == "table":
        print(f"ambient rank: {fan.ambient_rank}", file=out)
        print(f"rays: {len(fan.rays)}", file=out)
        print(f"cones: {len(fan.cones)}", file=out)
        print(f"census: {census}", file=out)
        print(f"N(t) = {render_poly(n)}", file=out)
        print(f"fan axiom: {status}", file=out)
        return EXIT_OK
    rows = [
        ("ambient_rank", str(fan.ambient_rank)),
        ("rays", str(len(fan.rays))),
        ("cones", str(len(fan.cones))),
        ("census", " ".join(map(str, census))),
        ("counting_function", render_poly(n)),
        ("fan_axiom", status),
    ]
    _emit(rows, args.format, out, {"census": [str(c) for c in census], "fan": fan.to_document()})
    return EXIT_OK


# --- argument parsing --------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")

    parser = argparse.ArgumentParser(
        prog="f1zeta",
        description="Absolute zeta functions and Euler products of torsion-free Noetherian F1-schemes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kappa", parents=[common], help="table of kappa_a(n) for n = 1..n_max")
    p.add_argument("a", type=int)
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_kappa)

    scheme_help = "affine:r | torus:r | p1 | fan:<path or bundled name> | ranks:[r1,...]"
    p = sub.add_parser("counting", parents=[common], help="counting polynomial N(t)")
    p.add_argument("scheme", help=scheme_help)
    p.set_defaults(func=cmd_counting)

    p = sub.add_parser("zeta", parents=[common], help="absolute zeta function, factored or evaluated")
    p.add_argument("scheme", help=scheme_help)
    p.add_argument("--s", help="evaluate at s = RE or RE,IM instead of printing the factored form")
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("euler", parents=[common], help="truncated Euler product and convergence verdict")
    p.add_argument("scheme", help=scheme_help)
    p.add_argument("--s", help="RE or RE,IM")
    p.add_argument("--truncate", type=int, default=DEFAULT_TRUNCATION)
    p.add_argument("--trace", metavar="PATH", help="write the partial products as CSV")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fan-info", parents=[common], help="census and counting function of a fan file")
    p.add_argument("fan", help="path to a fan JSON file or a bundled fan name")
    p.add_argument("--strict", action="store_true", help="check the fan axiom (ambient rank <= 2)")
    p.set_defaults(func=cmd_fan_info)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except PoleError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_POLE
    except (DomainError, FanError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InternalCheckError as e:
        print(f"internal check failed: {e}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
