"""Cycle counts and irredundant row counts for the family P_m.

The row count follows 3^m + 4m + 2.  Run: python3 demos/exponential_family.py [max_m]
"""

import sys
import time

from lengthpoly.order import generate_pm
from lengthpoly.schrijver import schrijver_system

max_m = int(sys.argv[1]) if len(sys.argv) > 1 else 3
print(f"{'m':>2} {'n':>3} {'cycles':>7} {'rows':>5} {'3^m+4m+2':>9} {'seconds':>8}")
for m in range(1, max_m + 1):
    P = generate_pm(m)
    t = time.perf_counter()
    S = schrijver_system(P)
    dt = time.perf_counter() - t
    print(f"{m:>2} {P.n:>3} {S.cycle_count:>7} {len(S):>5} {3**m + 4*m + 2:>9} {dt:>8.2f}")
