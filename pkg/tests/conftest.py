from itertools import combinations

import pytest

from turanshift.core import Family, graph
from turanshift.dominance import GenericSource


def all_graphs(n):
    edges = list(combinations(range(1, n + 1), 2))
    for m in range(1 << len(edges)):
        yield graph(n, (e for b, e in enumerate(edges) if m >> b & 1))


C5 = graph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
G1 = graph(5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3)])
G2 = graph(5, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)])


@pytest.fixture
def src():
    return GenericSource(seed=12345, trials=3)


@pytest.fixture
def c5():
    return C5


def family_from_mask(n: int, k: int, m: int) -> Family:
    sets = list(combinations(range(1, n + 1), k))
    return Family(n, k, (s for b, s in enumerate(sets) if m >> b & 1))
