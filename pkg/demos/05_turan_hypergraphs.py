"""
Turán (3,4) hypergraphs
=======================

Triples such that every 4-set contains one.  The cyclic three-part
construction has exactly h(n) triples and dominates the shifted family C(n).
"""

from math import comb

from turanshift import GenericSource, dominates, rank_r
from turanshift.constructions import is_turan_hypergraph, random_turan_hypergraph, turan_34_hypergraph
from turanshift.core import c_family, h_value
from turanshift.homology import complex_of, reduced_betti

src = GenericSource(seed=3)

for n in range(4, 11):
    h = turan_34_hypergraph(n)
    v = dominates(h, c_family(n), src)
    print(f"n={n:2d}  |H|={len(h):3d}  h(n)={h_value(n):3d}  Turán: {is_turan_hypergraph(h) is True}  "
          f"dominates C(n): {v.outcome.value}")

# random minimal examples are usually larger than h(n)
for seed in range(5):
    h = random_turan_hypergraph(7, seed)
    b1 = reduced_betti(complex_of(h))[1]
    r1 = rank_r(h, 1, src).rank
    print(f"seed {seed}: |H|={len(h)}  h1={b1} (<= {7 - 2})  rank_1={r1} (>= {comb(5, 2)})")
