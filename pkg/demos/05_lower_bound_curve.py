"""The K_{a,b} lower-bound curve as CSV, ready for external plotting.

Flat at b while a < b/2 (where the value is known exactly), then the
counting bound (sqrt(6 b/a + 4) - 2) a rises to about 1.1623 b at a = b.
"""

import math

from pathsep import bipartite_bounds, bounds_table, format_bounds_csv

b = 8
print(format_bounds_csv(bounds_table(b, steps=4)))

report = bipartite_bounds(b, b)
print(f"# at a = b = {b}: lower = {report.lower:.6f} = "
      f"(sqrt(10) - 2) b = {(math.sqrt(10) - 2) * b:.6f}")
report = bipartite_bounds(b // 2, b)
print(f"# at a = b/2 = {b // 2}: lower = {report.lower:.6f} (meets the flat regime)")
