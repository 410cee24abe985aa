"""Show how the prime-indexed transforms act on integer-valued polynomials.

For each of the bundled maximal orders (the integers, the Gaussian integers,
the golden-ratio order) and each prime in {2, 3, 5}, print the splitting
data and the first few transforms of a starter polynomial, confirming each
stays integer-valued by exhaustive residue enumeration.

Usage: python scripts/transform_demo.py [--poly X] [--depth 2]
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from prufer.errors import BudgetExceededError
from prufer.ivp import int_member_order, ramification_profile, transform_sequence
from prufer.orders import load_order
from prufer.poly import RationalPolynomial

ORDERS = pathlib.Path(__file__).resolve().parent.parent / "orders"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--poly", default="X")
    parser.add_argument("--depth", type=int, default=2)
    args = parser.parse_args()
    f = RationalPolynomial.parse(args.poly)
    for name in ("z", "z_i", "z_golden"):
        order = load_order(ORDERS / f"{name}.json")
        print(f"== {name} (dim {order.dim})")
        for p in (2, 3, 5):
            profile = ramification_profile(order, p)
            print(f"  p={p}: pairs={list(profile.pairs)} s={profile.s} r={profile.r}")
            try:
                seq = transform_sequence(f, profile, args.depth)
            except BudgetExceededError as exc:
                print(f"    sequence stopped: {exc}")
                continue
            for k, entry in enumerate(seq):
                try:
                    ok = int_member_order(order, entry)
                except BudgetExceededError:
                    print(f"    f_{k}: denominator {entry.denominator}, residue check over budget")
                    continue
                print(f"    f_{k} = {entry}  member={str(ok).lower()}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
