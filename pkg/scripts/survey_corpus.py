"""Decide every order in a directory of JSON presentations and print a table.

Usage: python scripts/survey_corpus.py [--orders DIR]
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from prufer.decision import decide_pruefer, verify_certificate
from prufer.errors import IndeterminateError
from prufer.orders import load_order


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--orders",
        default=pathlib.Path(__file__).resolve().parent.parent / "orders",
        type=pathlib.Path,
    )
    args = parser.parse_args()
    paths = sorted(args.orders.glob("*.json"))
    if not paths:
        print(f"no order files under {args.orders}", file=sys.stderr)
        return 1
    width = max(len(p.stem) for p in paths)
    bad = 0
    for path in paths:
        order = load_order(path)
        try:
            cert = decide_pruefer(order)
        except IndeterminateError as exc:
            print(f"{path.stem.ljust(width)}  dim {order.dim}  INDETERMINATE ({exc.reason})")
            bad += 1
            continue
        verified = verify_certificate(order, cert)
        if not verified:
            bad += 1
        print(
            f"{path.stem.ljust(width)}  dim {order.dim}  {cert.verdict:<3} "
            f"{cert.reason:<22} verified={str(verified).lower()}"
        )
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
