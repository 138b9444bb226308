"""Randomized search for each forbidden type pair; a hit would contradict the table.

    python3 scripts/run_nonexistence.py [--budget 10000] [--seeds 5]
"""
import argparse
import time

from cilab import pairs as pc


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=int, default=10_000)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--sign", type=int, default=1, choices=(1, -1))
    args = ap.parse_args()

    total = 0
    t0 = time.perf_counter()
    print(f"{'pair':20s} {'n':>2s} {'hits':>5s} {'closest':>9s}")
    for a, b in pc.FORBIDDEN_PAIRS:
        hits, closest = 0, float("inf")
        for seed in range(1, args.seeds + 1):
            res = pc.forbidden_search(a, b, budget=args.budget, seed=seed, sign=args.sign)
            hits += res.n_hits
            closest = min(closest, res.closest)
            n = res.n
        total += hits
        print(f"{a + ' / ' + b:20s} {n:2d} {hits:5d} {closest:9.2e}")
    print(f"\n{total} hits over {len(pc.FORBIDDEN_PAIRS) * args.seeds} searches "
          f"({time.perf_counter() - t0:.1f} s)")


if __name__ == "__main__":
    main()
