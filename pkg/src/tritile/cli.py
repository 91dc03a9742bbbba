"""Command-line entry point: ``tritile <command> ...``.

Exit codes: 0 success, 1 negative verification or classification result,
2 usage error, 3 input/output error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import generators as gen
from .catalog import catalog_entry, catalog_names
from .classifier import TargetKind, TileDescriptor, classify
from .exact import FieldMismatch, parse_number
from .fileformat import FormatError, dumps, read_tiling
from .geometry import Point, Triangle
from .svg import render_svg
from .tiling import TilingError, verify

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

FAMILIES = [
    "quadratic",
    "biquadratic",
    "hexagonal",
    "pythagorean",
    "equilateral-six",
    "right-306090-three",
    "triple-square",
    "bisect",
]


class UsageError(Exception):
    pass


def _parse_triangle(text: str) -> Triangle:
    """``x,y;x,y;x,y`` with coordinates in the exact number grammar."""
    pts = [p.strip() for p in text.split(";")]
    if len(pts) != 3:
        raise UsageError(f"--triangle needs three points separated by ';', got {text!r}")
    out = []
    for p in pts:
        xy = p.split(",")
        if len(xy) != 2:
            raise UsageError(f"bad point {p!r}; expected x,y")
        try:
            out.append(Point(parse_number(xy[0].strip()), parse_number(xy[1].strip())))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad coordinate in {p!r}: {exc}") from None
    return Triangle(*out)


def _need(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.family} needs {' '.join(missing)}")
    return [getattr(args, n) for n in names]


def _generate(args):
    fam = args.family
    scale = parse_number(args.scale) if args.scale else 1
    tri = _parse_triangle(args.triangle) if args.triangle else None
    if fam == "quadratic":
        (n,) = _need(args, "n")
        return gen.quadratic(tri or Triangle.of((0, 0), (1, 0), (0, 1)), n)
    if fam == "biquadratic":
        return gen.biquadratic(*_need(args, "m", "n"))
    if fam == "hexagonal":
        return gen.hexagonal(*_need(args, "k"))
    if fam == "pythagorean":
        return gen.pythagorean(*_need(args, "p", "q", "r"))
    if fam == "equilateral-six":
        return gen.equilateral_six(2 * scale)
    if fam == "right-306090-three":
        return gen.right_306090_three(scale)
    if fam == "triple-square":
        (m,) = _need(args, "m")
        return gen.triple_square(m, scale)
    if tri is None:
        raise UsageError("bisect needs --triangle")
    return gen.bisect_isosceles(tri)


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def cmd_generate(args) -> int:
    t = _generate(args)
    _write(dumps(t), args.output)
    if args.svg:
        _write(render_svg(t), args.svg)
    return EXIT_OK


def cmd_verify(args) -> int:
    t = read_tiling(args.file)
    try:
        report = verify(t)
    except (TilingError, FieldMismatch) as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    if args.json:
        print(json.dumps(report.to_dict(), ensure_ascii=False, indent=2))
    else:
        print(report.text())
    if not report.ok:
        for f in report.failures:
            print(f, file=sys.stderr)
        return EXIT_NEGATIVE
    return EXIT_OK


def cmd_classify(args) -> int:
    try:
        tile = TileDescriptor.parse(" ".join(args.tile))
        target = TargetKind(args.target)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    verdict = classify(tile, target, args.n)
    print(verdict.to_json() if args.json else str(verdict))
    return EXIT_OK if verdict.admissible else EXIT_NEGATIVE


def cmd_compose(args) -> int:
    t = gen.compose(read_tiling(args.base), read_tiling(args.sub))
    _write(dumps(t), args.output)
    return EXIT_OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for name in catalog_names():
            e = catalog_entry(name)
            print(f"{name}\tN={e.tiling.N}\t{e.provenance}")
        return EXIT_OK
    if not args.name:
        raise UsageError("catalog emit needs a NAME")
    try:
        e = catalog_entry(args.name)
    except LookupError as exc:
        raise UsageError(str(exc)) from None
    _write(dumps(e.tiling), args.output)
    return EXIT_OK


def cmd_render(args) -> int:
    _write(render_svg(read_tiling(args.file), markers=args.markers), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tritile", description="Exact triangle tilings: build, check, classify.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a tiling from a known family")
    g.add_argument("family", choices=FAMILIES)
    for name in ("n", "m", "k", "p", "q", "r"):
        g.add_argument(f"--{name}", type=int)
    g.add_argument("--scale", help="exact positive number (default 1)")
    g.add_argument("--triangle", help="reference as 'x,y;x,y;x,y'")
    g.add_argument("-o", "--output", help="tiling file (default stdout)")
    g.add_argument("--svg", help="also render an SVG figure")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="check a tiling file")
    v.add_argument("file")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="decide a (tile, target, N) triple")
    c.add_argument("--tile", nargs="+", required=True, metavar="DESC",
                   help="right-tan E/F | right-30-60-90 | right-isosceles | right-other | "
                        "isosceles-30-30-120 | equilateral | oblique")
    c.add_argument("--target", required=True, choices=[t.value for t in TargetKind])
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_classify)

    m = sub.add_parser("compose", help="replace every tile of BASE by a copy of SUB")
    m.add_argument("base")
    m.add_argument("sub")
    m.add_argument("-o", "--output")
    m.set_defaults(func=cmd_compose)

    k = sub.add_parser("catalog", help="list or emit individual tilings")
    k.add_argument("action", choices=["list", "emit"], nargs="?", default="list")
    k.add_argument("name", nargs="?")
    k.add_argument("-o", "--output")
    k.set_defaults(func=cmd_catalog)

    r = sub.add_parser("render", help="draw a tiling file as SVG")
    r.add_argument("file")
    r.add_argument("-o", "--output")
    r.add_argument("--markers", action="store_true", help="mark tiling vertices")
    r.set_defaults(func=cmd_render)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"tritile: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FormatError, OSError) as exc:
        print(f"tritile: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        # DomainError and other bad parameter values
        print(f"tritile: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
