#!/usr/bin/env python3
"""Tour of the sorting API: in-place sorts, counters, custom comparators,
and the retained equals buffer."""

import random

from tsqsort import SortConfig, Sorter, sort_with_stats

print("= basic sorting =")
ar = [5, 3, 5, 1, 5]
stats = sort_with_stats(ar)
print(f"sorted {ar} with {stats.comparisons} comparisons and "
      f"{stats.element_writes} element writes "
      f"({stats.virtual_swaps:.2f} virtual swaps)")

print("\n= custom comparator (by string length, then alphabetically) =")
words = ["kiwi", "fig", "cranberry", "date", "plum", "apple"]
def by_len(x, y):
    k1, k2 = (len(x), x), (len(y), y)
    return (k1 > k2) - (k1 < k2)
sort_with_stats(words, by_len)
print(words)

print("\n= a dedicated sorter instance retains its buffer =")
s = Sorter(seed=42)
rnd = random.Random(0)
s.sort([rnd.randint(0, 9) for _ in range(10000)])
print(f"after n=10000: buffer capacity {s.temp.capacity}, "
      f"allocations {s.temp.alloc_count}")
s.sort([rnd.randint(0, 9) for _ in range(5000)])
print(f"after n=5000:  buffer capacity {s.temp.capacity}, "
      f"allocations {s.temp.alloc_count}  (reused, no reallocation)")
s.free_temp_storage()
print(f"after free_temp_storage: capacity {s.temp.capacity}")

print("\n= per-state activity on a mixed input =")
ar = [rnd.randint(0, 50) for _ in range(20000)]
stats = Sorter(seed=7).sort_with_stats(ar)
print(f"stages {stats.stages}, max depth {stats.max_depth}")
for state, count in stats.state_activations.items():
    if count:
        print(f"  {state:7s} activated {count} times")
print(f"handlers: {stats.handler_activations}")

print("\n= configuration =")
cfg = SortConfig(insertion_threshold=8, mitigation_enabled=False)
ar = [rnd.randint(0, 99) for _ in range(1000)]
stats = Sorter(cfg, seed=1).sort_with_stats(ar)
print(f"threshold 8, mitigation off: {stats.comparisons} comparisons")
