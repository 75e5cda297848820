"""Saturation, Fulton and jump-bound scans over small Littlewood-Richardson triples."""
import argparse
from concurrent.futures import ProcessPoolExecutor
from functools import partial

from quiversi.horn import scan_properties


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=[2, 3, 4])
    ap.add_argument("--size-bound", type=int, default=6)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--no-jumps", action="store_true")
    args = ap.parse_args()
    for n in args.n:
        reports = _shards(n, args)
        rep = reports[0]
        for other in reports[1:]:
            rep = rep.merge(other)
        print(f"n = {n}, size <= {args.size_bound}: {rep.triples} triples, {rep.nonzero} nonzero, "
              f"saturation {len(rep.saturation_violations)}, Fulton {len(rep.fulton_violations)}, "
              f"jumps {len(rep.jump_violations)}")


def _shards(n, args):
    run = partial(scan_properties, n, args.size_bound, check_jumps=not args.no_jumps)
    if args.jobs == 1:
        return [run()]
    with ProcessPoolExecutor(args.jobs) as pool:
        futures = [pool.submit(run, shard=(k, args.jobs)) for k in range(args.jobs)]
        return [f.result() for f in futures]


if __name__ == "__main__":
    main()
