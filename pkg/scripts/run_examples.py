"""Reproduce the golden examples A-E and print one JSON report per example."""

import argparse
import json
import sys

from cisupport import lab
from cisupport.config import EngineConfig


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("labels", nargs="*", default=list(lab.GOLDEN), help="subset of A B C D E")
    ap.add_argument("--field", default="QQ")
    args = ap.parse_args()
    cfg = EngineConfig(field=args.field)
    failed = 0
    for label in args.labels:
        rep = lab.GOLDEN[label.upper()](cfg)
        print(json.dumps(rep.as_dict(), indent=2, default=str))
        failed += rep.status != lab.VERIFIED
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
