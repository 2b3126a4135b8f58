"""
Shifting the five-cycle
=======================

Exterior shifting replaces a family by the smallest family (in a chosen term
order) that is weakly isomorphic to it.  The 5-cycle is the standard example.
"""

from turanshift import GenericSource, TermOrder, exterior_shift, weakly_isomorphic
from turanshift.core import graph
from turanshift.formats import format_family
from turanshift.shifting import comb_shift

c5 = graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
src = GenericSource(seed=0, trials=3)

# lex and revlex pick different shifted graphs
for order in (TermOrder.LEX, TermOrder.REVLEX, TermOrder.SUMLEX):
    res = exterior_shift(c5, order, src)
    print(f"{order.value:7s}", " ".join(f"{a}{b}" for a, b in res.family),
          "unanimous" if res.unanimous else "trials disagree")

# both shifts are weakly isomorphic to the cycle, but not to each other
g1 = exterior_shift(c5, TermOrder.LEX, src).family
g2 = exterior_shift(c5, TermOrder.REVLEX, src).family
print("C5 ~ G1:", all(weakly_isomorphic(c5, g1, src)))
print("C5 ~ G2:", all(weakly_isomorphic(c5, g2, src)))
print("G1 ~ G2:", all(weakly_isomorphic(g1, g2, src)))

# combinatorial shifting gets to a shifted graph too, by explicit moves
shifted, log = comb_shift(c5)
print("combinatorial pivots:", log)
print(format_family(shifted), end="")
