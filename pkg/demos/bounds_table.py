"""
Where the known bounds sit
==========================

Exact rational evaluation of the lower and upper bounds on phi(h, n),
compared with search results where these are cheap.
"""

from simplex_sidon import bounds_report, search_phi

table = bounds_report(10, 3)
print(table.format_table())

# intervals left by the non-asymptotic bounds for n = 2
for h in (2, 4, 8, 16):
    lo, hi = bounds_report(h, 2).phi_interval()
    print(f"h={h:2d}  phi in [{lo}, {hi}]")

v = search_phi(3, 3).value
lo, hi = bounds_report(3, 3).phi_interval()
print(f"phi(3,3) = {v}, bounds give [{lo}, {hi}]")
