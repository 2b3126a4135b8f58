"""Exterior and combinatorial shifting."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .core import (Cmp, Family, KSet, Permutation, TermOrder, apply_permutation,
                   family_order_compare, is_shifted, m_value)
from .dominance import GenericSource, MinorTable
from .linalg import EchelonState, FieldMatrix, det_mod_p


@dataclass(frozen=True)
class ShiftResult:
    family: Family
    shifted_flag: bool
    trials: int
    unanimous: bool


def exterior_shift_with(family: Family, order: TermOrder, a: FieldMatrix) -> Family:
    """Greedy ``order``-smallest family weakly isomorphic to ``family`` with respect to ``a``.

    Candidates are scanned in ``order``; a candidate is kept when its row of
    minors against the columns ``family`` is independent of the rows kept so far.
    """
    n, k = family.n, family.k
    if a.shape != (n, n):
        raise ValueError(f"matrix {a.shape} does not act on [{n}]")
    order.check_k(k)
    if not det_mod_p(a):
        raise ValueError("shifting matrix is singular")
    target = len(family)
    if target == 0:
        return family
    cols = sorted(family.members)
    minors = MinorTable(a)
    state = EchelonState(target, a.p)
    chosen = []
    for t in order.sorted_ksets(n, k):
        if state.insert(minors.row(t, cols)):
            chosen.append(t)
            if len(chosen) == target:
                break
    if len(chosen) != target:
        raise AssertionError("compound matrix of an invertible matrix lost rank")
    return Family(n, k, chosen)


def exterior_shift(family: Family, order: TermOrder, src: GenericSource) -> ShiftResult:
    """Shift against each trial matrix and keep the ``order``-smallest outcome."""
    results = [exterior_shift_with(family, order, a) for a in src.matrices(family.n)]
    best = results[0]
    for r in results[1:]:
        if family_order_compare(r, best, order) is Cmp.LESS:
            best = r
    unanimous = all(r == best for r in results)
    return ShiftResult(best, is_shifted(best), len(results), unanimous)


def shift_complex(faces: dict[int, Family], order: TermOrder, src: GenericSource) -> dict[int, Family]:
    """Shift each face level of a complex separately (keys are face sizes)."""
    return {size: exterior_shift(f, order, src).family for size, f in faces.items()}


# -- combinatorial shifting ------------------------------------------------------


def comb_shift_step(family: Family, i: int, j: int) -> Family:
    """Replace ``j`` by ``i`` in every member where the result is not already present."""
    if not 1 <= i < j <= family.n:
        raise ValueError(f"need 1 <= i < j <= n, got i={i}, j={j}")
    members = family.members
    out = set()
    for f in members:
        if j in f and i not in f:
            s = tuple(sorted(set(f) - {j} | {i}))
            if s not in members:
                out.add(s)
                continue
        out.add(f)
    return Family(family.n, family.k, out)


def _sweep(family: Family, log: list[tuple[int, int]], top: int | None = None) -> Family:
    top = family.n if top is None else top
    verts = range(1, top + 1)
    while True:
        changed = False
        for i, j in combinations(verts, 2):
            nxt = comb_shift_step(family, i, j)
            if nxt != family:
                log.append((i, j))
                family, changed = nxt, True
        if not changed:
            return family


def comb_shift(family: Family, pivots: Iterable[tuple[int, int]] | None = None
               ) -> tuple[Family, list[tuple[int, int]]]:
    """Combinatorial shifting; returns the family and the pivots that changed it.

    Explicit ``pivots`` are applied in order as given.  Otherwise all pivots
    are swept in lexicographic order until the family is shifted.
    """
    log: list[tuple[int, int]] = []
    if pivots is not None:
        for i, j in pivots:
            nxt = comb_shift_step(family, i, j)
            if nxt != family:
                log.append((i, j))
            family = nxt
        return family, log
    return _sweep(family, log), log


# -- the Turán labelling -----------------------------------------------------------


class MantelViolation(ValueError):
    def __init__(self, triple: KSet):
        super().__init__(f"3-set {triple} spans no edge")
        self.triple = triple


def _mantel_witness(g: Family) -> KSet | None:
    for t in combinations(range(1, g.n + 1), 3):
        a, b, c = t
        if (a, b) not in g.members and (a, c) not in g.members and (b, c) not in g.members:
            return t
    return None


def turan_labeling(g: Family) -> Permutation:
    """Relabel so that each successive top pair of labels is a non-edge.

    The returned permutation maps old labels to new ones.  Once the remaining
    vertex set induces a complete graph, it keeps its input order.
    """
    if g.k != 2:
        raise ValueError("turan_labeling needs a graph")
    w = _mantel_witness(g)
    if w is not None:
        raise MantelViolation(w)
    remaining = list(range(1, g.n + 1))
    new = {}
    while len(remaining) >= 2:
        pair = next(((u, v) for u, v in combinations(remaining, 2) if (u, v) not in g.members), None)
        if pair is None:
            break
        top = len(remaining)
        new[pair[0]], new[pair[1]] = top - 1, top
        remaining = [v for v in remaining if v not in pair]
    for label, v in enumerate(remaining, start=1):
        new[v] = label
    return Permutation.from_mapping(g.n, new)


def _restricted(family: Family, m: int) -> Family:
    return Family(m, family.k, (s for s in family.members if s[-1] <= m))


def _turan_pivots(g: Family, m: int, log: list[tuple[int, int]]) -> Family:
    """Shift the induced graph on ``[m]`` to contain ``B(m)``, acting on all of ``g``."""
    sub = _restricted(g, m)
    if m <= 1 or len(sub) == m * (m - 1) // 2:
        return g
    g = _turan_pivots(g, m - 2, log)
    pivots = [(i, m - 1) for i in range(1, m - 1)] + [(i, m) for i in range(1, m - 1)]
    g, applied = comb_shift(g, pivots)
    log.extend(applied)
    # finish the combinatorial shifting of the induced graph on [m]
    sweep_log: list[tuple[int, int]] = []
    _sweep(_restricted(g, m), sweep_log)
    g, applied = comb_shift(g, sweep_log)
    log.extend(applied)
    return g


def comb_shift_turan(g: Family) -> tuple[Family, Permutation, list[tuple[int, int]]]:
    """Relabel by :func:`turan_labeling`, then apply the recursive pivot scheme.

    Returns the shifted graph, the labelling used, and the effective pivots.
    """
    perm = turan_labeling(g)
    h = apply_permutation(g, perm)
    log: list[tuple[int, int]] = []
    h = _turan_pivots(h, h.n, log)
    return h, perm, log


# -- elementary maps -----------------------------------------------------------------


@dataclass(frozen=True)
class ElementaryMap:
    """The linear map fixing ``e_v`` for ``v != j`` and sending ``e_j`` to ``e_i + e_j``."""

    i: int
    j: int
    n: int

    def __post_init__(self):
        if not 1 <= self.i < self.j <= self.n:
            raise ValueError(f"need 1 <= i < j <= n, got {self.i}, {self.j}, {self.n}")


def elementary_shift_matrix(m: ElementaryMap, p: int | None = None) -> FieldMatrix:
    """Identity plus a unit entry in row ``i``, column ``j`` (columns are images of basis vectors)."""
    rows = [[int(r == c) for c in range(m.n)] for r in range(m.n)]
    rows[m.i - 1][m.j - 1] = 1
    return FieldMatrix(rows, p) if p is not None else FieldMatrix(rows)


def elementary_shift(family: Family, i: int, j: int, order: TermOrder = TermOrder.LEX) -> Family:
    """Exterior shifting with respect to an elementary map."""
    return exterior_shift_with(family, order, elementary_shift_matrix(ElementaryMap(i, j, family.n)))


def initial_segment(order: TermOrder, n: int, k: int, size: int) -> Family:
    return Family(n, k, order.sorted_ksets(n, k)[:size])

