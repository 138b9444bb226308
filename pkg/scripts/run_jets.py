"""Integrability checks on a few named 2-jets plus random circle and dense families.

    python3 scripts/run_jets.py [--count 100] [--n 4]
"""
import argparse

import numpy as np

from cilab import catalog as cat
from cilab import jets as jl
from cilab.curvature import CurvatureModel


def describe(name, v):
    where = "" if v.ok else f"  failed {v.details.get('failed')} k={v.details.get('k')}"
    print(f"{name:32s} {'integrable' if v.ok else 'rejected':10s} residual {v.residual:.2e}{where}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--seed", type=int, default=24601)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    m = CurvatureModel("grassmannian2", args.n)

    describe("product of circles", jl.is_integrable_jet(jl.product_of_circles_jet()))
    describe("flat counterexample", jl.is_integrable_jet(jl.flat_counterexample_jet()))
    for v in cat.VARIANTS:
        W = cat.construct_type(cat.random_tag(v, args.n, rng), args.n)
        describe(f"h = 0 on {v}", jl.is_integrable_jet(jl.zero_jet(m, W)))

    ok = sum(bool(jl.is_integrable_jet(jl.random_circle_jet(m, rng))) for _ in range(args.count))
    print(f"\nrandom circles: {ok}/{args.count} integrable")
    rejected = 0
    for _ in range(args.count):
        W = cat.construct_type(cat.random_tag("c_k", args.n, rng, 2, 0), args.n)
        rejected += not jl.is_integrable_jet(jl.random_dense_jet(m, W, rng))
    print(f"dense jets on c_2: {rejected}/{args.count} rejected")

    cf = jl.curved_flat_normal_form(jl.product_of_circles_jet())
    print(f"\ncurved-flat normal form (product of circles): ok={cf.ok} residuals={cf.residuals}")
    cf = jl.curved_flat_normal_form(jl.flat_counterexample_jet())
    print(f"curved-flat normal form (counterexample): ok={cf.ok} failed={cf.failed_clause} at {cf.failed_term}")


if __name__ == "__main__":
    main()
