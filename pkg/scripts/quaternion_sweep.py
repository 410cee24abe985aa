"""Randomized and exhaustive checks on the Hurwitz quaternion order.

Usage: python scripts/quaternion_sweep.py [--samples 10000] [--seed 1]
"""

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from prufer.quaternions import (
    closure_check,
    four_square_lemma_check,
    four_square_violations,
    norm_in_D_check,
)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=10000)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    for n in (2, 3):
        t0 = time.monotonic()
        ok = four_square_lemma_check(n)
        print(f"all-even lemma mod 4^{n}: {'PASS' if ok else 'FAIL'} "
              f"({time.monotonic() - t0:.2f}s)")
    print(f"violations mod 4: {len(four_square_violations(1))} (all-odd tuples)")
    print(f"violations mod 16: {len(four_square_violations(2))}")

    report = closure_check(args.samples, args.seed)
    print(
        f"closure sweep: {report.samples} samples, {report.integral_count} integral, "
        f"{report.member_count} members, {len(report.counterexamples)} counterexamples"
    )
    print(f"norm denominators stay odd: {'PASS' if norm_in_D_check(1000) else 'FAIL'}")
    return 0 if report.consistent else 1


if __name__ == "__main__":
    raise SystemExit(main())
