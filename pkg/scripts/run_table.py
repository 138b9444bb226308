"""Verify every pair-table row at its canonical dimension and print a summary.

    python3 scripts/run_table.py [--sign -1] [--mutations 20] [--n 4]
"""
import argparse

from cilab import pairs as pc


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sign", type=int, default=1, choices=(1, -1))
    ap.add_argument("--mutations", type=int, default=20)
    ap.add_argument("--n", type=int, default=None, help="skip rows that need a larger n")
    ap.add_argument("--seed", type=int, default=24601)
    args = ap.parse_args()

    res = pc.verify_table(n=args.n, sign=args.sign, seed=args.seed, mutations=args.mutations)
    print(f"{'row':24s} {'n':>2s} {'ok':>3s} {'residual':>10s} {'mutations':>9s} {'min mut res':>11s}")
    for r in res:
        print(f"{r.row_id:24s} {r.n:2d} {'yes' if r.ok else 'NO':>3s} {r.max_residual:10.1e} "
              f"{r.mutations_failed:4d}/{r.mutations_total:<4d} {r.mutation_min_residual:11.2e}")
    bad = [r.row_id for r in res if not r.ok]
    print(f"\n{len(res) - len(bad)}/{len(res)} rows verified" + (f"; failing: {bad}" if bad else ""))


if __name__ == "__main__":
    main()
