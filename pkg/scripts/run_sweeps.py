"""Seeded sweeps for every polygon kind; prints one summary line per check.

    python scripts/run_sweeps.py [--count 500] [--seed 42]
"""
import argparse
import time

from quadsquares.report import aggregate
from quadsquares.sampling import samples
from quadsquares.suites import hexagon_suite, parallelogram_suite, quad_suite, triangle_suite

SUITES = {
    "quad": quad_suite,
    "parallelogram": parallelogram_suite,
    "triangle": triangle_suite,
    "hexagon": hexagon_suite,
}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=500)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--kinds", nargs="*", default=list(SUITES))
    args = ap.parse_args()
    failures = 0
    for kind in args.kinds:
        t0 = time.perf_counter()
        checks = []
        for obj in samples(kind, args.count, args.seed):
            checks.extend(SUITES[kind](obj))
        secs = time.perf_counter() - t0
        print(f"== {kind}: {args.count} instances, seed {args.seed}, {secs:.1f}s")
        for c in aggregate(checks):
            failures += not c.passed
            print(f"  {'ok  ' if c.passed else 'FAIL'} {c.name:<32} {c.residual:.2e} (tol {c.tolerance:.0e})")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
