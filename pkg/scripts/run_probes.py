"""Strong DI, DE, Hilbert and Para probes plus the Tor-support experiments on seeded pairs."""

import argparse
import json
import sys

from cisupport import instances as inst
from cisupport import lab
from cisupport.ci import cyclic, free


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--n-max", type=int, default=6, help="Tor range for the experiments")
    args = ap.parse_args()
    bad = 0
    for M, N in lab.seeded_independent_pairs(args.seed, args.count):
        rep = lab.conjecture_probes(M, N)
        bad += rep.status in (lab.REFUTED, lab.COUNTEREXAMPLE)
        print(json.dumps(rep.as_dict(), default=str))
    ex = inst.example_a()
    R = ex["M"].ring
    for N in (ex["N"], cyclic(R, ["x"]), free(R, 1)):
        rep = lab.conjecture_probes(ex["M"], N, x="x-y")
        bad += rep.status in (lab.REFUTED, lab.COUNTEREXAMPLE)
        print(json.dumps(rep.as_dict(), default=str))
    e = inst.example_e()
    chain = [*lab.constructed_pairs()[1], lab.constructed_pairs()[2][1]]
    for M, N, ch in ((e["M"], e["N"], None), (*lab.constructed_pairs()[0], None), (chain[0], chain[1], chain)):
        rep = lab.experiments(M, N, args.n_max, chain=ch)
        bad += rep.status == lab.REFUTED
        print(json.dumps(rep.as_dict(), default=str))
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
