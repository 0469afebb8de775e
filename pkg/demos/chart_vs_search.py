"""How the chart and plain backtracking scale on the benchmark family.

Each bag is "Jean aime Marie" plus a chain of adverbs; there is only one
sentence, but backtracking re-derives shared pieces in every context.

Run:  python demos/chart_vs_search.py [max_size]
"""

import sys

from sbgen.bench import expected_sentence, run_bench

max_size = int(sys.argv[1]) if len(sys.argv) > 1 else 11
rows = run_bench(3, max_size, reps=3)

best = {}
for r in rows:
    key = (r.size, r.mode)
    if key not in best or r.seconds < best[key].seconds:
        best[key] = r

print(f"{'size':>4}  {'chart edges':>11}  {'search nodes':>12}  {'chart ms':>8}  {'search ms':>9}")
for size in range(3, max_size + 1):
    c, b = best[size, "chart-all"], best[size, "baseline-all"]
    print(f"{size:>4}  {c.expansions:>11}  {b.expansions:>12}  "
          f"{c.seconds * 1e3:>8.2f}  {b.seconds * 1e3:>9.2f}")
print()
print("largest sentence:", " ".join(expected_sentence(max_size)))
