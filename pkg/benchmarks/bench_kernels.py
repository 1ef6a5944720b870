"""Compare the compiled and pure-Python kernels on the same workload.

    python benchmarks/bench_kernels.py [--weight 14] [--repeat 3]

The workload is every LR count needed to expand ``s_mu s_nu`` for all pairs
of a given total weight, plus the star map on the same pairs.
"""

import argparse
import sys
import time

from schurstar.kernels import available_backends
from schurstar.partition import add, contains, pad, partitions, union
from schurstar.schur import dominance_interval


def workload(weight: int):
    triples, pairs = [], []
    for k in range(weight // 2 + 1):
        for mu in partitions(weight - k):
            for nu in partitions(k):
                pairs.append((mu, nu))
                n = max(len(mu), len(nu))
                floor = tuple(max(a, b) for a, b in zip(pad(mu, n), pad(nu, n)))
                for theta in dominance_interval(union(mu, nu), add(mu, nu), floor):
                    if contains(mu, theta):
                        triples.append((theta, mu, nu))
    return pairs, triples


def best_of(repeat: int, fn) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--weight", type=int, default=14)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    pairs, triples = workload(args.weight)
    print(f"weight {args.weight}: {len(pairs)} pairs, {len(triples)} LR counts")
    results = {}
    for mod in available_backends():
        counts = [mod.lr_count(*t) for t in triples]
        lr = best_of(args.repeat, lambda: [mod.lr_count(*t) for t in triples])
        star = best_of(args.repeat, lambda: [mod.star_direct(mu, nu, max(len(mu), len(nu))) for mu, nu in pairs])
        results[mod.BACKEND] = (counts, lr, star)
        print(f"{mod.BACKEND:>8}  lr_count {lr * 1e3:9.1f} ms   star_direct {star * 1e3:8.1f} ms")
    if len(results) == 2:
        (c1, lr1, s1), (c2, lr2, s2) = results["python"], results["cython"]
        if c1 != c2:
            print("backends disagree", file=sys.stderr)
            return 1
        print(f"speedup   lr_count {lr1 / lr2:9.1f}x     star_direct {s1 / s2:8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
