#!/usr/bin/env python3
"""Measured comparison/swap counts against the closed-form averages.

The predictors idealize a partition-only algorithm; real runs also count
pivot sampling, holdover traffic and small-range insertion copies, so
measured virtual swaps sit a constant factor above the asymptotic form
while comparisons track their envelope closely.
"""

import math
import random

from tsqsort import Sorter, classic_qsort, dual_pivot_qsort, three_way_qsort
from tsqsort.analysis import (predict_comparisons, predict_swaps_classic,
                              predict_swaps_tsq_approx,
                              predict_swaps_tsq_exact)

SEEDS = range(1, 9)


def shuffled(n, seed):
    ar = list(range(n))
    random.Random(seed).shuffle(ar)
    return ar


print(f"{'n':>7} {'tsq swaps':>12} {'eq9 form':>10} {'classic':>10} "
      f"{'eq4 form':>10} {'tsq cmp':>10} {'2n ln n':>10}")
for n in (1000, 10000, 50000):
    tsq_vs = tsq_c = cls_vs = 0.0
    for seed in SEEDS:
        st = Sorter(seed=seed).sort_with_stats(shuffled(n, seed))
        tsq_vs += st.virtual_swaps
        tsq_c += st.comparisons
        cls_vs += classic_qsort(shuffled(n, seed), seed=seed).virtual_swaps
    k = len(list(SEEDS))
    print(f"{n:>7} {tsq_vs/k:>12.0f} {predict_swaps_tsq_approx(n):>10.0f} "
          f"{cls_vs/k:>10.0f} {predict_swaps_classic(n):>10.0f} "
          f"{tsq_c/k:>10.0f} {2*n*math.log(n):>10.0f}")

print("\nexact vs asymptotic swap form (they converge):")
for n in (10, 100, 1000, 10000):
    e, a = predict_swaps_tsq_exact(n), predict_swaps_tsq_approx(n)
    print(f"  n={n:>6}: exact {e:10.2f}  asymptotic {a:10.2f} "
          f"(gap {abs(e-a)/e:.2%})")

print("\nswap comparison across algorithms, n=20000, mean of 5 seeds:")
n = 20000
acc = {}
for seed in range(1, 6):
    base = shuffled(n, seed)
    acc.setdefault("tristate", []).append(
        Sorter(seed=seed).sort_with_stats(list(base)).virtual_swaps)
    acc.setdefault("classic", []).append(
        classic_qsort(list(base), seed=seed).virtual_swaps)
    acc.setdefault("threeway", []).append(
        three_way_qsort(list(base), seed=seed).virtual_swaps)
    acc.setdefault("dualpivot", []).append(
        dual_pivot_qsort(list(base), seed=seed).virtual_swaps)
for name, vals in sorted(acc.items(), key=lambda kv: sum(kv[1])):
    print(f"  {name:10s} {sum(vals)/len(vals):>10.0f}")
