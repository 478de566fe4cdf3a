#!/usr/bin/env python3
"""Run every identity sweep at its full range and print one summary line each.

Exit code is 0 only if every sweep passes. Expect a couple of minutes of
wall time; the definitional tuple-counting oracle dominates.
"""

import sys
import time

from liouville_reps.cli import run_verify

SWEEPS = [
    # identity, start, end, kwargs
    ("eq12", 2, 300, {"k": 8}),
    ("thm11a", 2, 200, {"k": 3}),
    ("thm11b", 2, 200, {"k": 3}),
    ("williams-t11", 1, 120, {"k": 3}),
    ("lemma21a", 2, 120, {"k": 4}),
    ("lemma21b", 2, 120, {"k": 3}),
    ("thm22a", 2, 300, {}),
    ("thm22b", 2, 300, {}),
    ("thm31", 2, 150, {}),
    ("definitional", 2, 60, {"oracle_depth": 60}),
]


def main() -> int:
    failures = 0
    for identity, start, end, kwargs in SWEEPS:
        t0 = time.perf_counter()
        report = run_verify(identity, start, end, **kwargs)
        elapsed = time.perf_counter() - t0
        status = "ok" if report.failed == 0 else "FAILED"
        print(
            f"{identity:14s} {start}..{end}  checked={report.checked:5d} "
            f"passed={report.passed:5d} failed={report.failed:3d} "
            f"({elapsed:6.2f}s)  {status}"
        )
        failures += report.failed
    print("all sweeps passed" if failures == 0 else f"{failures} mismatches")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
