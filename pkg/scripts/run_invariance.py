"""Seeded invariance families, join dimension formula, Betti convolution and Hilbert identity sweeps."""

import argparse
import json
import sys
from collections import Counter

from cisupport import lab
from cisupport.homological import hilbert_identity_holds
from cisupport.support import support


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, nargs="+", default=[42])
    ap.add_argument("--count", type=int, default=10, help="random modules per ring and seed")
    ap.add_argument("--pairs", type=int, default=10, help="pairs for the Betti and Hilbert sweeps")
    ap.add_argument("--verbose", action="store_true", help="print every report, not just failures")
    args = ap.parse_args()
    refuted = 0
    for seed in args.seeds:
        reps = lab.invariance_suite(seed, args.count)
        reps += [lab.check_join_dimension(A, B) for A, B in lab.disjoint_linear_pairs(seed, 50)]
        tally = Counter((r.name, r.status) for r in reps)
        betti = hilbert = 0
        for M, N in lab.seeded_pairs(seed, args.pairs):
            lhs, rhs = lab.betti_convolution(M, N, 6)
            betti += all(a <= b for a, b in zip(lhs, rhs))
            if support(M).intersect(support(N)).is_empty():
                hilbert += hilbert_identity_holds(M, N, 12)
        for r in reps:
            if args.verbose or r.status == lab.REFUTED:
                print(json.dumps(r.as_dict(), default=str))
        bad = sum(1 for r in reps if r.status == lab.REFUTED)
        refuted += bad
        summary = {f"{name}:{status}": n for (name, status), n in sorted(tally.items())}
        print(json.dumps({"seed": seed, "refuted": bad, "betti_ok": betti, "hilbert_ok": hilbert,
                          "tally": summary}))
    return 1 if refuted else 0


if __name__ == "__main__":
    sys.exit(main())
