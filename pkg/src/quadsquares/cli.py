"""Command-line entry point: ``quadsquares {verify,svg,sweep,variants}``.

Exit codes: 0 when every check passes, 1 when any check fails, 2 for input
errors. Reports are JSON on standard output.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from .errors import GeometryError, ParseError, SamplingExhausted, ValidationError
from .io import load_polygon
from .isometry import DEFAULT_TOL
from .quads import PERMUTATIONS, offset_variants, variant_histogram
from .report import Check, aggregate, build_report, dumps
from .sampling import samples
from .suites import figure_orientations, hexagon_suite, parallelogram_suite, quad_suite, triangle_suite
from .svg import default_figure, render_svg

DEFAULT_NS = {"quad": range(-3, 4), "parallelogram": range(-3, 4), "hexagon": range(-2, 3)}
# stands in for non-finite residuals so every reported value stays finite
FAILED_RESIDUAL = sys.float_info.max


def parse_n(text: str):
    """``"3"`` or an inclusive range ``"a..b"``."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise argparse.ArgumentTypeError(f"empty range {text!r}")
        return range(lo, hi + 1)
    return range(int(text), int(text) + 1)


def parse_perm(text: str):
    perm = tuple(int(c) for c in text)
    if sorted(perm) != [1, 2, 3, 4]:
        raise argparse.ArgumentTypeError(f"{text!r} is not a permutation of 1234")
    return perm


def _finite(checks):
    return [
        c if math.isfinite(c.residual)
        else Check(c.name, FAILED_RESIDUAL, c.tolerance, c.detail, c.anchor, c.aggregate)
        for c in checks
    ]


def run_suite(kind, obj, ns, perm=None, tol=DEFAULT_TOL):
    """Checks for one polygon; domain errors become a single failed check."""
    try:
        if kind == "quad":
            return quad_suite(obj, ns, perms=[perm] if perm else PERMUTATIONS, tol=tol)
        if kind == "parallelogram":
            return parallelogram_suite(obj, ns, tol=tol)
        if kind == "triangle":
            return triangle_suite(obj, tol=tol)
        return hexagon_suite(obj, ns, tol=tol)
    except GeometryError as exc:
        return [Check("domain error", math.inf, tol, {"error": f"{type(exc).__name__}: {exc}"})]


def cmd_verify(args) -> int:
    doc = load_polygon(args.input)
    obj = doc.to_domain()
    ns = args.n or DEFAULT_NS.get(doc.kind, range(0, 1))
    checks = _finite(run_suite(doc.kind, obj, ns, args.perm, args.tol))
    extra = {"n": [min(ns), max(ns)]}
    if doc.kind in ("quad", "parallelogram"):
        extra["orientations"] = figure_orientations(obj, 0)
    report = build_report(checks, seed=args.seed, kind=doc.kind, label=doc.label,
                          extra=extra, verbose=args.verbose)
    if not args.verbose and "orientations" in report:
        report["orientations"] = {k: float(f"{v:.3e}") for k, v in report["orientations"].items()}
    sys.stdout.write(dumps(report))
    return 0 if all(c.passed for c in checks) else 1


def cmd_sweep(args) -> int:
    ns = args.n or DEFAULT_NS.get(args.kind, range(0, 1))
    checks = []
    for obj in samples(args.kind, args.count, args.seed):
        checks.extend(run_suite(args.kind, obj, ns, args.perm, args.tol))
    agg = _finite(aggregate(checks))
    report = build_report(
        agg, seed=args.seed, kind=args.kind, label=f"sweep of {args.count}",
        extra={"count": args.count, "n": [min(ns), max(ns)]}, verbose=args.verbose,
    )
    sys.stdout.write(dumps(report))
    return 0 if all(c.passed for c in agg) else 1


def cmd_svg(args) -> int:
    doc = load_polygon(args.input)
    if doc.kind not in ("quad", "parallelogram"):
        raise ValidationError("svg figures need a quad or parallelogram document")
    ns = args.n or range(0, 1)
    spec = default_figure(doc.kind, ns, args.perm)
    text = render_svg(doc.to_domain(), spec)
    try:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        sys.stderr.write(f"IoError: {exc}\n")
        return 2
    return 0


def cmd_variants(args) -> int:
    variants = offset_variants(args.modulus)
    hist = variant_histogram(variants)
    out = {
        "modulus": args.modulus,
        "count": len(variants),
        "classes": [
            {"multiset": list(k), "count": hist[k]}
            for k in sorted(hist, key=lambda key: (sum(key), key))
        ],
        "variants": [list(v.m) for v in variants],
    }
    sys.stdout.write(json.dumps(out, indent=2) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="quadsquares", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, need_input=True):
        if need_input:
            p.add_argument("--input", required=True, help="polygon document (JSON)")
        p.add_argument("--n", type=parse_n, help="family index or inclusive range a..b; use --n=-3..3")
        p.add_argument("--perm", type=parse_perm, help="restrict to one permutation, e.g. 1234")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tol", type=float, default=DEFAULT_TOL)
        p.add_argument("--verbose", action="store_true", help="full-precision residuals")

    p = sub.add_parser("verify", help="run every applicable check on one polygon")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("svg", help="draw the polygon and its constructions")
    common(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_svg)

    p = sub.add_parser("sweep", help="run the checks on seeded random polygons")
    common(p, need_input=False)
    p.add_argument("--kind", required=True, choices=["quad", "parallelogram", "triangle", "hexagon"])
    p.add_argument("--count", type=int, default=100)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("variants", help="list the angle-offset variants for a modulus")
    p.add_argument("--modulus", "-M", type=int, default=2)
    p.set_defaults(func=cmd_variants)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if getattr(args, "count", 1) < 1:
        sys.stderr.write("error: --count must be >= 1\n")
        return 2
    try:
        return args.func(args)
    except (ParseError, ValidationError, GeometryError, SamplingExhausted, OSError) as exc:
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
