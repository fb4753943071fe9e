#!/usr/bin/env python3
"""The sorted/reversed fast paths and single-pass equals absorption.

Pivot sampling flags stages whose samples arrive fully ordered; the
handlers then verify-and-bypass instead of partitioning.  On a fully
sorted input the only element writes left are the per-stage pivot
extraction and restore; on a fully reversed input the top stage does
floor(n/2) pairwise swaps and every deeper stage sees sorted data.
"""

from tsqsort import Sorter

n = 100000

st = Sorter(seed=1).sort_with_stats(list(range(n)))
print(f"sorted input, n={n}:")
print(f"  stages {st.stages}, element writes {st.element_writes} "
      f"(= 2 per stage: extraction + restore)")
print(f"  migration writes: {st.element_writes - 2 * st.stages}")
print(f"  handler bypasses: {st.handler_activations['sorted']}, "
      f"fallbacks: {st.handler_activations['fallbacks']}")

st = Sorter(seed=1).sort_with_stats(list(range(n))[::-1])
bound = 3 * (n // 2) + 4 * st.stages
print(f"\nreversed input, n={n}:")
print(f"  element writes {st.element_writes} <= {bound} "
      f"(= 3*(n/2) pairwise swaps + 4 per stage)")
print(f"  reversed-handler activations: {st.handler_activations['reversed']}")

st = Sorter(seed=1).sort_with_stats([7] * n)
print(f"\nall-equal input, n={n}:")
print(f"  one stage absorbs everything: stages={st.stages}, "
      f"comparisons {st.comparisons} (~n), writes {st.element_writes}")

st = Sorter(seed=1).sort_with_stats([min(i, 500) for i in range(n)])
print(f"\nplateau input (long equal tail), n={n}:")
print(f"  comparisons {st.comparisons} (<= 3n = {3*n}), "
      f"buffer high water {st.temp_high_water}")

# a nearly sorted input: handlers absorb the clean prefix/suffix work
ar = list(range(n))
ar[1000], ar[90000] = ar[90000], ar[1000]
st = Sorter(seed=1).sort_with_stats(ar)
print(f"\nnearly sorted (one distant swap), n={n}:")
print(f"  comparisons {st.comparisons}, writes {st.element_writes}, "
      f"fallbacks {st.handler_activations['fallbacks']}")
