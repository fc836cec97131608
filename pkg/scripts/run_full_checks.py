#!/usr/bin/env python3
"""Run the full cross-validation checklist and print a timing breakdown.

Equivalent to `z2z4 reproduce` with per-phase timings; handy while
profiling the enumeration engine.

Example:
    python3 scripts/run_full_checks.py --jobs 4
"""

import argparse
import time

from z2z4.reproduce import (
    FULL_ALPHAS,
    FULL_BETAS,
    FULL_NS,
    run_mixed_sweep,
    run_z4_sweep,
    run_checks,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    t0 = time.time()
    records = run_mixed_sweep(FULL_ALPHAS, FULL_BETAS, jobs=args.jobs)
    t1 = time.time()
    print(f"mixed sweep: {len(records)} codes in {t1 - t0:.1f}s")
    z4 = run_z4_sweep(FULL_NS, jobs=args.jobs)
    t2 = time.time()
    print(f"quaternary sweep: {len(z4)} codes in {t2 - t1:.1f}s")

    checks = run_checks(jobs=args.jobs)
    t3 = time.time()
    width = max(len(c.name) for c in checks)
    for c in checks:
        print(f"[{'ok' if c.passed else 'FAIL'}] {c.name.ljust(width)}  {c.details}")
    print(f"checklist: {t3 - t2:.1f}s total {t3 - t0:.1f}s")
    raise SystemExit(0 if all(c.passed for c in checks) else 1)


if __name__ == "__main__":
    main()
