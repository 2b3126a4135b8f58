"""Extremal constructions, cover predicates and instance search."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Literal, Sequence

import numpy as np

from .core import Family, KSet, Permutation, balanced_sizes, graph

MAX_GRAPH_N = 7


@dataclass(frozen=True)
class CoverWitness:
    """A vertex subset violating a cover condition.  Falsy, so predicates read as booleans."""

    subset: KSet
    counts: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return False


CoverResult = Literal[True] | CoverWitness


def _require_k(f: Family, k: int) -> None:
    if f.k != k:
        raise ValueError(f"expected a {k}-uniform family, got k={f.k}")


def turan_34_hypergraph(n: int, sizes: Sequence[int] | None = None) -> Family:
    """Triples inside a part, or two in part ``i`` and one in part ``i+1`` (mod 3)."""
    if sizes is None:
        sizes = balanced_sizes(n)
    sizes = tuple(sizes)
    if len(sizes) != 3 or sum(sizes) != n or min(sizes) < 0:
        raise ValueError(f"part sizes {sizes} do not partition [{n}]")
    part = {}
    start = 1
    for idx, s in enumerate(sizes):
        for v in range(start, start + s):
            part[v] = idx
        start += s
    triples = []
    for t in combinations(range(1, n + 1), 3):
        ps = [part[v] for v in t]
        if ps[0] == ps[1] == ps[2]:
            triples.append(t)
            continue
        for i in range(3):
            if ps.count(i) == 2 and ps.count((i + 1) % 3) == 1:
                triples.append(t)
                break
    return Family(n, 3, triples)


def is_turan_hypergraph(h: Family) -> CoverResult:
    """Every 4-set contains a member."""
    _require_k(h, 3)
    mem = h.members
    for q in combinations(range(1, h.n + 1), 4):
        if not any(t in mem for t in combinations(q, 3)):
            return CoverWitness(q, (0,))
    return True


def is_mantel_cover(g: Family) -> CoverResult:
    """Every 3-set contains an edge."""
    _require_k(g, 2)
    mem = g.members
    for t in combinations(range(1, g.n + 1), 3):
        if not any(e in mem for e in combinations(t, 2)):
            return CoverWitness(t, (0,))
    return True


def induced_edges(g: Family, vertices) -> int:
    vs = sorted(vertices)
    return sum(1 for e in combinations(vs, 2) if e in g.members)


def involution_condition(g: Family, tau: Permutation) -> CoverResult:
    """``e(G[S]) + e(G[tau S]) >= 2`` for every 3-set ``S``."""
    _require_k(g, 2)
    if tau.n != g.n or not tau.is_involution():
        raise ValueError("tau must be an involution of the vertex set")
    for s in combinations(range(1, g.n + 1), 3):
        a, b = induced_edges(g, s), induced_edges(g, tau.apply(s))
        if a + b < 2:
            return CoverWitness(s, (a, b))
    return True


class GroupAction:
    """A finite permutation group on ``[n]``, given by all of its elements."""

    def __init__(self, n: int, elements: Sequence[Permutation]):
        elems = list(dict.fromkeys(elements))
        if any(g.n != n for g in elems):
            raise ValueError("group elements act on different sets")
        found = set(elems)
        if Permutation.identity(n) not in found:
            raise ValueError("group lacks the identity")
        for g in elems:
            if g.inverse() not in found:
                raise ValueError(f"group not closed under inverse at {g.images}")
            for h in elems:
                if g.compose(h) not in found:
                    raise ValueError("group not closed under composition")
        self.n = n
        self.elements = tuple(elems)

    @classmethod
    def trivial(cls, n: int) -> "GroupAction":
        return cls(n, [Permutation.identity(n)])

    @classmethod
    def generated_by(cls, n: int, gens: Sequence[Permutation]) -> "GroupAction":
        elems = {Permutation.identity(n)}
        frontier = list(elems)
        while frontier:
            g = frontier.pop()
            for s in gens:
                h = s.compose(g)
                if h not in elems:
                    elems.add(h)
                    frontier.append(h)
        return cls(n, sorted(elems, key=lambda g: g.images))

    @classmethod
    def symmetric(cls, n: int) -> "GroupAction":
        from itertools import permutations
        return cls(n, [Permutation(p) for p in permutations(range(1, n + 1))])

    def __len__(self) -> int:
        return len(self.elements)


def group_condition(g: Family, group: GroupAction) -> CoverResult:
    """``|Γ| <= Σ_γ e(G[γ T])`` for every 3-set ``T``."""
    _require_k(g, 2)
    if group.n != g.n:
        raise ValueError("group acts on a different vertex set")
    for t in combinations(range(1, g.n + 1), 3):
        total = sum(induced_edges(g, s.apply(t)) for s in group.elements)
        if total < len(group):
            return CoverWitness(t, (total,))
    return True


# -- exhaustive graph search over edge bitmasks -------------------------------------


def _graph_tables(n: int):
    edges = list(combinations(range(1, n + 1), 2))
    bit = {e: 1 << b for b, e in enumerate(edges)}
    triples = list(combinations(range(1, n + 1), 3))
    tmask = np.array([sum(bit[e] for e in combinations(t, 2)) for t in triples], dtype=np.int64)
    return edges, bit, triples, tmask


def _popcount(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x).astype(np.int64)


def _graph_from_mask(n: int, edges, m: int) -> Family:
    return graph(n, (e for b, e in enumerate(edges) if m >> b & 1))


def _check_bound(n: int, max_n: int) -> None:
    if n > max_n:
        raise ValueError(f"n={n} exceeds exhaustive bound {max_n}")


_CHUNK = 1 << 16


def enumerate_mantel_covers(n: int, max_n: int = MAX_GRAPH_N) -> Iterator[Family]:
    """All labelled graphs on ``[n]`` in which every 3-set spans an edge, by increasing edge mask."""
    _check_bound(n, max_n)
    edges, _, _, tmask = _graph_tables(n)
    total = 1 << len(edges)
    for lo in range(0, total, _CHUNK):
        masks = np.arange(lo, min(total, lo + _CHUNK), dtype=np.int64)
        ok = np.ones(masks.shape, dtype=bool)
        for tm in tmask:
            ok &= (masks & tm) != 0
        for m in masks[ok]:
            yield _graph_from_mask(n, edges, int(m))


@dataclass(frozen=True)
class MinimumReport:
    minimum: int
    examples: tuple[Family, ...]
    count: int


def min_edges_involution(n: int, tau: Permutation, max_n: int = MAX_GRAPH_N, cap: int = 100) -> MinimumReport:
    """Exact minimum edge count over graphs satisfying the involution condition.

    Graphs are scanned layer by layer in edge count (vectorised over bitmasks),
    so the scan stops at the first layer containing a valid graph.  ``count``
    is the number of minimisers; at most ``cap`` of them are returned.
    """
    _check_bound(n, max_n)
    if tau.n != n or not tau.is_involution():
        raise ValueError("tau must be an involution of [n]")
    edges, bit, triples, tmask = _graph_tables(n)
    pos = {t: i for i, t in enumerate(triples)}
    partner = np.array([tmask[pos[tau.apply(t)]] for t in triples], dtype=np.int64)
    total = 1 << len(edges)
    counts = _popcount(np.arange(total, dtype=np.int64))
    for e in range(len(edges) + 1):
        masks = np.flatnonzero(counts == e).astype(np.int64)
        ok = np.ones(masks.shape, dtype=bool)
        for tm, pm in zip(tmask, partner):
            ok &= _popcount(masks & tm) + _popcount(masks & pm) >= 2
            if not ok.any():
                break
        hits = masks[ok]
        if hits.size:
            ex = tuple(_graph_from_mask(n, edges, int(m)) for m in hits[:cap])
            return MinimumReport(e, ex, int(hits.size))
    raise AssertionError("complete graph always satisfies the condition")


def involution_types(n: int) -> list[Permutation]:
    """One involution per conjugacy class: ``t`` transpositions ``(1 n), (2 n-1), ...``."""
    return [Permutation.transpositions(n, [(i, n + 1 - i) for i in range(1, t + 1)])
            for t in range(n // 2 + 1)]


# -- the triangle-free claim ----------------------------------------------------------


def neighbours(g: Family, v: int) -> set[int]:
    return {u for e in g.members if v in e for u in e if u != v}


def y_graph(x: Family) -> Family:
    """Edges ``uw`` whose endpoints share a neighbour in ``x``."""
    _require_k(x, 2)
    nb = {v: neighbours(x, v) for v in range(1, x.n + 1)}
    return graph(x.n, (e for v in nb for e in combinations(sorted(nb[v]), 2)))


def triangle(x: Family) -> KSet | None:
    mem = x.members
    for t in combinations(range(1, x.n + 1), 3):
        if all(e in mem for e in combinations(t, 2)):
            return t
    return None


class TriangleError(ValueError):
    def __init__(self, t: KSet):
        super().__init__(f"graph contains the triangle {t}")
        self.triangle = t


@dataclass(frozen=True)
class ClaimCheck:
    y_edges: int
    half_m: int
    x_edges: int

    @property
    def holds(self) -> bool:
        return self.y_edges + self.half_m >= self.x_edges

    @property
    def tight(self) -> bool:
        return self.y_edges + self.half_m == self.x_edges

    def __bool__(self) -> bool:
        return self.holds


def claim_tfree_check(x: Family) -> ClaimCheck:
    """``e(Y(X)) + floor(m/2) >= e(X)`` for a triangle-free ``X`` on ``m`` vertices."""
    _require_k(x, 2)
    t = triangle(x)
    if t is not None:
        raise TriangleError(t)
    return ClaimCheck(len(y_graph(x)), x.n // 2, len(x))


def random_triangle_free(m: int, rng: np.random.Generator) -> Family:
    """Random bipartite graph, then random edges that create no triangle.

    Seed-reproducible; not uniform over triangle-free graphs.
    """
    side = rng.integers(0, 2, size=m)
    p = rng.random()
    edges = set()
    for u, w in combinations(range(1, m + 1), 2):
        if side[u - 1] != side[w - 1] and rng.random() < p:
            edges.add((u, w))
    nb = {v: set() for v in range(1, m + 1)}
    for u, w in edges:
        nb[u].add(w)
        nb[w].add(u)
    extra = [e for e in combinations(range(1, m + 1), 2) if e not in edges]
    rng.shuffle(extra)
    budget = int(rng.integers(0, len(extra) + 1))
    for u, w in extra[:budget]:
        if not nb[u] & nb[w]:
            edges.add((u, w))
            nb[u].add(w)
            nb[w].add(u)
    return graph(m, edges)


def perfect_matching(m: int) -> Family:
    return graph(m, ((2 * i + 1, 2 * i + 2) for i in range(m // 2)))


def random_mantel_cover(n: int, rng: np.random.Generator) -> Family:
    """Complement of a random triangle-free graph."""
    return random_triangle_free(n, rng).complement()


def turan_graph(n: int) -> Family:
    """Two disjoint cliques on ``1..floor(n/2)`` and the remaining vertices."""
    half = n // 2
    return graph(n, [e for e in combinations(range(1, n + 1), 2) if (e[0] <= half) == (e[1] <= half)])


def random_turan_hypergraph(n: int, seed: int | np.random.Generator) -> Family:
    """Greedy deletion from all triples, keeping the Turán property; the result is minimal."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    triples = list(combinations(range(1, n + 1), 3))
    alive = set(triples)
    # number of alive triples inside each 4-set
    cover = {q: 4 for q in combinations(range(1, n + 1), 4)}
    quads_of = {t: [tuple(sorted(t + (v,))) for v in range(1, n + 1) if v not in t] for t in triples}
    for idx in rng.permutation(len(triples)):
        t = triples[idx]
        qs = quads_of[t]
        if all(cover[q] > 1 for q in qs):
            alive.discard(t)
            for q in qs:
                cover[q] -= 1
    return Family(n, 3, alive)
