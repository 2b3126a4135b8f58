"""
An inequality for triangle-free graphs
======================================

For triangle-free X on m vertices, let Y join any two vertices with a
common neighbour.  Then e(Y) + floor(m/2) >= e(X), tight on perfect matchings.
"""

import numpy as np

from turanshift.constructions import claim_tfree_check, perfect_matching, random_triangle_free

rng = np.random.default_rng(5)
slack = []
for _ in range(300):
    x = random_triangle_free(int(rng.integers(2, 13)), rng)
    c = claim_tfree_check(x)
    slack.append(c.y_edges + c.half_m - c.x_edges)

slack = np.array(slack)
print("min slack", slack.min(), "tight cases", int((slack == 0).sum()), "of", slack.size)
print("slack histogram", np.bincount(slack)[:10])

for m in (2, 6, 12):
    print(m, claim_tfree_check(perfect_matching(m)))
