"""
The shifted extremal families B(n) and C(n)
===========================================

B(n) = {ab : a+b <= n} has as many edges as the two-clique graph T(n);
C(n) = {abc : a+c <= n, 2a+b <= n} has h(n) triples.
"""

from math import comb

from turanshift.core import (TermOrder, b_family, c_family, count_meeting_prefix, h_value,
                             is_shifted, turan_edge_count)

print(" n  |B(n)|  e(T(n))  |C(n)|  h(n)")
for n in range(3, 16):
    print(f"{n:2d}  {len(b_family(n)):6d}  {turan_edge_count(n):7d}  {len(c_family(n)):6d}  {h_value(n):4d}")

# every member of C(n) meets [r] in a controlled way while r <= n/3
n = 12
for r in range(0, n + 1):
    got = count_meeting_prefix(c_family(n), r)
    print(f"r={r:2d}  meeting [r]: {got:3d}  r*C(n-r-1,2): {r * comb(max(n - r - 1, 0), 2):3d}")

print("B(10), C(10) shifted:", is_shifted(b_family(10)), is_shifted(c_family(10)))

# with the (a+c, 2a+b, a) order, C(n) is an initial segment only up to n = 8
for n in range(6, 12):
    seq = TermOrder.CTRIPLE.sorted_ksets(n, 3)
    c = c_family(n).members
    print(n, set(seq[:len(c)]) == c)
