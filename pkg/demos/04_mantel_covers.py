"""
Graphs in which every triple spans an edge
==========================================

Such graphs have at least as many edges as two disjoint cliques on n
vertices.  The same minimum survives a weaker condition twisted by an
involution, and shifting pushes every such graph above B(n).
"""

from turanshift import GenericSource, TermOrder, exterior_shift
from turanshift.constructions import (enumerate_mantel_covers, involution_types,
                                      min_edges_involution)
from turanshift.core import b_family, turan_edge_count
from turanshift.shifting import comb_shift_turan

for n in range(3, 7):
    for tau in involution_types(n):
        rep = min_edges_involution(n, tau)
        moved = sum(1 for v in range(1, n + 1) if tau(v) != v) // 2
        print(f"n={n} transpositions={moved}: minimum {rep.minimum} "
              f"(T(n) has {turan_edge_count(n)}), {rep.count} minimisers")

src = GenericSource(seed=2)
n = 5
covers = list(enumerate_mantel_covers(n))
above = sum(exterior_shift(g, TermOrder.SUMLEX, src).family.issuperset(b_family(n)) for g in covers)
print(f"{above} of {len(covers)} covers on [{n}] shift above B({n}) under sumlex")

# the combinatorial route: relabel, then shift by pivots
g = covers[len(covers) // 2]
shifted, perm, log = comb_shift_turan(g)
print("relabelling", perm.images, "pivots", log)
print("contains B(n):", shifted.issuperset(b_family(n)))
