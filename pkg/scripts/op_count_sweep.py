"""Sigma-application counts of half-enumeration vs. split as n grows, for a few degrees.

Runs the engines on the odd-transformed graphs, as the counting pipeline does.

    python scripts/op_count_sweep.py --n 8 10 12 14 --degrees 2 3 4 --strategy greedy
"""

from __future__ import annotations

import argparse

from matchspectrum.bench import gen_random_bipartite
from matchspectrum.cutdist import OpStats, cutdist_halfenum, cutdist_split, plan_split
from matchspectrum.graph import to_odd_graph


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs="+", default=[8, 10, 12, 14])
    ap.add_argument("--degrees", type=float, nargs="+", default=[2, 3, 4])
    ap.add_argument("--seeds", type=int, default=3)
    ap.add_argument("--strategy", choices=["paper", "greedy"], default="paper")
    args = ap.parse_args()

    print("n,degree,seed,u1,h,classes,sigma_halfenum,sigma_split,ratio")
    for degree in args.degrees:
        for n in args.n:
            for seed in range(args.seeds):
                g = to_odd_graph(gen_random_bipartite(n, degree, seed)).graph
                half, split = OpStats(), OpStats()
                a = cutdist_halfenum(g, stats=half)
                b = cutdist_split(g, plan_split(g, args.strategy), stats=split)
                assert a == b
                ratio = split.sigma_applications / half.sigma_applications
                print(f"{n},{degree:g},{seed},{split.u1_size},{split.h},{split.class_count},"
                      f"{half.sigma_applications},{split.sigma_applications},{ratio:.4f}")


if __name__ == "__main__":
    main()
