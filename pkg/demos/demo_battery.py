#!/usr/bin/env python3
"""A desk-scale run of the adversarial input battery.

Seven distributions crossed with six reorderings, every algorithm's
comparison count per cell; the same grid the CLI exposes as
``tsqsort bench --preset figures``.
"""

from tsqsort.baselines import REGISTRY
from tsqsort.bench import BATTERY_REORDERS
from tsqsort.datagen import DISTRIBUTIONS, GenSpec, generate

N = 20000
ARANGE = 500
names = sorted(REGISTRY)

print(f"comparisons per cell, n={N}, arange={ARANGE}")
print(f"{'distribution':>12} {'reorder':>18} " +
      " ".join(f"{x:>10}" for x in names))
wins = {x: 0 for x in names}
for dist in DISTRIBUTIONS:
    for kind in BATTERY_REORDERS:
        base = generate(GenSpec(distribution=dist, reorder=kind, n=N,
                                arange=ARANGE, seed=1))
        ref = sorted(base)
        row = {}
        for name in names:
            ar = list(base)
            st = REGISTRY[name](ar, seed=1)
            assert ar == ref
            row[name] = st.comparisons
        best = min(row.values())
        for name in names:
            if row[name] <= 1.10 * best:
                wins[name] += 1
        marks = " ".join(f"{row[x]:>10}" for x in names)
        print(f"{dist:>12} {kind:>18} {marks}")

cells = len(DISTRIBUTIONS) * len(BATTERY_REORDERS)
print(f"\nlowest-or-within-10% cells out of {cells}:")
for name in names:
    print(f"  {name:10s} {wins[name]:>3}")
