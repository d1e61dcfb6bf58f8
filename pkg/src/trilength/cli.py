"""Command-line interface.

Exit codes: 0 ok, 1 rejected input (not outerplanar / selftest failure),
2 unreadable or malformed input, 3 verification failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import selftest
from .graph import GraphError, parse_graph
from .hstar import EncodingError, QREncoding, format_address, is_proper, parse_address, qr_decode, qr_encode, ty
from .outerplanar import NotOuterplanarError, is_outerplanar
from .pipeline import DrawResult, draw_graph, draw_tstar
from .realize import DEFAULT_TOL, TorusParams, VerificationError, emit_json, emit_svg, solve_params

EXIT_OK, EXIT_REJECT, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3
MAX_TSTAR_DEPTH = 10


class UsageError(Exception):
    pass


def _csv_floats(text: str, count: int | None = None) -> list[float]:
    try:
        vals = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}") from None
    if count is not None and len(vals) != count:
        raise UsageError(f"expected {count} comma-separated numbers, got {text!r}")
    return vals


def _csv_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _default_seed() -> int:
    raw = os.environ.get("TRILENGTH_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"TRILENGTH_SEED={raw!r} is not an integer") from None


def _params_from_args(args) -> tuple[TorusParams | None, int]:
    theta_given = args.theta0 is not None or args.theta1 is not None or args.scale is not None
    sources = [args.lengths is not None, theta_given, args.seed is not None]
    if sum(sources) > 1:
        raise UsageError("--seed, --lengths and --theta0/--theta1/--scale are mutually exclusive")
    seed = args.seed if args.seed is not None else _default_seed()
    try:
        if args.lengths is not None:
            return solve_params(*_csv_floats(args.lengths, 3)), seed
        if theta_given:
            if args.theta0 is None or args.theta1 is None:
                raise UsageError("--theta0 and --theta1 must be given together")
            scale = 1.0 if args.scale is None else args.scale
            return TorusParams(args.theta0, args.theta1, scale), seed
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return None, seed


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _emit(res: DrawResult, fmt: str, out: str | None) -> int:
    print(res.report.summary(), file=sys.stderr)
    if not res.report.passed:
        print("refusing to write an unverified drawing", file=sys.stderr)
        return EXIT_VERIFY
    if res.report.near_coincident:
        print("warning: two vertices are numerically almost coincident", file=sys.stderr)
    text = emit_svg(res.drawing) if fmt == "svg" else emit_json(res.drawing, res.placement)
    _write_output(text, out)
    return EXIT_OK


def cmd_check(args) -> int:
    g = parse_graph(_read_input(args.input))
    verdict = is_outerplanar(g)
    if verdict:
        print("outerplanar")
        return EXIT_OK
    print(f"not outerplanar: {verdict.reason}")
    return EXIT_REJECT


def cmd_draw(args) -> int:
    params, seed = _params_from_args(args)
    g = parse_graph(_read_input(args.input))
    try:
        res = draw_graph(g, params, seed=seed, tol=args.tol, show_added=args.show_added)
    except NotOuterplanarError as exc:
        print(f"not outerplanar: {exc}", file=sys.stderr)
        return EXIT_REJECT
    return _emit(res, args.format, args.output)


def cmd_tstar(args) -> int:
    if not 0 <= args.depth <= MAX_TSTAR_DEPTH:
        raise UsageError(f"--depth must lie in [0, {MAX_TSTAR_DEPTH}]")
    params, seed = _params_from_args(args)
    res = draw_tstar(args.depth, params, seed=seed, tol=args.tol)
    return _emit(res, args.format, args.output)


def _describe(address, enc: QREncoding) -> None:
    print(f"address={format_address(address) or '-'}")
    print(enc)
    print(f"proper={'true' if is_proper(enc) else 'false'}")
    print(f"ty={ty(address)}")


def cmd_encode(args) -> int:
    a = parse_address(args.address)
    _describe(a, qr_encode(a))
    return EXIT_OK


def cmd_decode(args) -> int:
    q, rho = _csv_ints(args.q), _csv_ints(args.rho)
    m = len(rho) if args.m is None else args.m
    enc = QREncoding(q, rho, m)
    _describe(qr_decode(enc), enc)
    return EXIT_OK


def cmd_selftest(args) -> int:
    if not 0 <= args.max_n <= 7:
        raise UsageError("--max-n must lie in [0, 7]")
    if not 0 <= args.depth <= 10:
        raise UsageError("--depth must lie in [0, 10]")
    ok = selftest.run(args.max_n, args.depth, args.samples)
    return EXIT_OK if ok else EXIT_REJECT


def _add_param_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, help="sample angles from this seed (default $TRILENGTH_SEED or 0)")
    p.add_argument("--lengths", help="target lengths a,b,c")
    p.add_argument("--theta0", type=float)
    p.add_argument("--theta1", type=float)
    p.add_argument("--scale", type=float)
    p.add_argument("--format", choices=("svg", "json"), default="svg")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="relative length tolerance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trilength",
        description="Degenerate drawings of outerplanar graphs with at most three edge lengths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether a graph file is outerplanar")
    p.add_argument("input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("draw", help="draw an outerplanar graph")
    p.add_argument("input")
    _add_param_flags(p)
    p.add_argument("--show-added", action="store_true", help="also draw augmentation edges (dashed)")
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("tstar", help="draw the tree of triangles down to a given depth")
    p.add_argument("--depth", type=int, required=True)
    _add_param_flags(p)
    p.set_defaults(func=cmd_tstar)

    p = sub.add_parser("encode", help="compress an address such as L,F,L,L")
    p.add_argument("address")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="expand q/rho/m back into an address")
    p.add_argument("--q", required=True)
    p.add_argument("--rho", default="")
    p.add_argument("--m", type=int)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("selftest", help="run the built-in property suite")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--samples", type=int, default=40)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, EncodingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
