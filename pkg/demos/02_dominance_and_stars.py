"""
Dominance against a star
========================

A graph dominates the star at vertex 1 exactly when it is connected, and is
dominated by the star exactly when it has no cycle.  Here the randomized
verdicts are compared with networkx on every graph with five vertices.
"""

from itertools import combinations

import networkx as nx

from turanshift import GenericSource, dominates
from turanshift.core import graph, star_family

n = 5
src = GenericSource(seed=1)
star = star_family(n, 2)
edges = list(combinations(range(1, n + 1), 2))

agree = total = 0
for m in range(1 << len(edges)):
    g = graph(n, (e for b, e in enumerate(edges) if m >> b & 1))
    nxg = nx.Graph(list(g))
    nxg.add_nodes_from(range(1, n + 1))
    up, down = dominates(g, star, src), dominates(star, g, src)
    total += 1
    agree += bool(up) == nx.is_connected(nxg) and bool(down) == nx.is_forest(nxg)

print(f"{agree} of {total} graphs on [{n}] agree with connectivity and acyclicity")

# a NO carries the rank it reached
print(dominates(graph(4, [(1, 2), (3, 4)]), star_family(4, 2), src).as_dict())
