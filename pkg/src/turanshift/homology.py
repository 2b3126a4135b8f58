"""Reduced rational homology of ``K(H)``: the top faces of ``H`` over a
complete lower skeleton."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import Family, KSet, TermOrder, complete_family, star_family
from .dominance import GenericSource, Verdict, dominates
from .linalg import IntMatrix, rank_exact_int
from .shifting import shift_complex


@dataclass(frozen=True)
class UniformComplex:
    n: int
    k: int
    top_faces: Family

    @property
    def dim(self) -> int:
        return self.k - 1

    def faces(self, i: int) -> list[KSet]:
        """Faces of dimension ``i`` in lexicographic order; ``i = -1`` is the empty face."""
        if i == self.k - 1:
            return sorted(self.top_faces.members)
        if -1 <= i < self.k - 1:
            return list(combinations(range(1, self.n + 1), i + 1))
        return []

    def levels(self) -> dict[int, Family]:
        """Face families keyed by face size ``1..k``."""
        out = {size: complete_family(self.n, size) for size in range(1, self.k)}
        out[self.k] = self.top_faces
        return out

    def euler_characteristic(self) -> int:
        """Reduced Euler characteristic (the empty face counts in dimension -1)."""
        return sum((-1) ** i * len(self.faces(i)) for i in range(-1, self.k))


def complex_of(h: Family) -> UniformComplex:
    return UniformComplex(h.n, h.k, h)


def boundary_matrix(c: UniformComplex, i: int) -> IntMatrix:
    """Signed incidence matrix from ``i``-faces to ``(i-1)``-faces.

    ``i = 0`` is the augmentation map (a row of ones).
    """
    if not 0 <= i <= c.k - 1:
        raise ValueError(f"boundary index {i} outside [0, {c.k - 1}]")
    lower = c.faces(i - 1)
    index = {f: r for r, f in enumerate(lower)}
    upper = c.faces(i)
    m = [[0] * len(upper) for _ in lower]
    for col, f in enumerate(upper):
        for j in range(len(f)):
            m[index[f[:j] + f[j + 1:]]][col] = -1 if j % 2 else 1
    return IntMatrix(m, cols=len(upper))


@dataclass(frozen=True)
class BettiReport:
    betti: dict[int, int]

    def __getitem__(self, i: int) -> int:
        return self.betti.get(i, 0)

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * b for i, b in self.betti.items())


def reduced_betti(c: UniformComplex) -> BettiReport:
    ranks = {i: rank_exact_int(boundary_matrix(c, i)) for i in range(c.k)}
    ranks[c.k] = 0
    return BettiReport({i: len(c.faces(i)) - ranks[i] - ranks[i + 1] for i in range(c.k)})


@dataclass(frozen=True)
class ShiftHomologyCheck:
    """Betti numbers against the face count read off the lexicographic shift.

    ``shifted_counts`` tests ``{1} ∪ F`` against the shifted complex,
    ``original_counts`` against the original one; the two readings are kept
    so divergences stay visible.
    """

    betti: dict[int, int]
    shifted_counts: dict[int, int]
    original_counts: dict[int, int]

    @property
    def ok(self) -> bool:
        return self.betti == self.shifted_counts

    @property
    def readings_agree(self) -> bool:
        return self.shifted_counts == self.original_counts

    def __bool__(self) -> bool:
        return self.ok


def homology_shift_check(c: UniformComplex, src: GenericSource) -> ShiftHomologyCheck:
    betti = reduced_betti(c).betti
    original = c.levels()
    shifted = shift_complex(original, TermOrder.LEX, src)

    def coned(levels: dict[int, Family], f: KSet) -> bool:
        g = tuple(sorted(set(f) | {1}))
        fam = levels.get(len(g))
        return fam is not None and g in fam.members

    shifted_counts, original_counts = {}, {}
    for i in range(c.k):
        level = shifted[i + 1]
        shifted_counts[i] = sum(1 for f in level.members if not coned(shifted, f))
        original_counts[i] = sum(1 for f in level.members if not coned(original, f))
    return ShiftHomologyCheck(betti, shifted_counts, original_counts)


@dataclass(frozen=True)
class StarPredicates:
    dominates_star: Verdict
    dominated_by_star: Verdict
    h_low: int
    h_top: int

    @property
    def consistent(self) -> bool:
        """Dominating the star iff ``h_low == 0``; dominated by it iff ``h_top == 0``."""
        return bool(self.dominates_star) == (self.h_low == 0) and \
            bool(self.dominated_by_star) == (self.h_top == 0)


def star_domination_predicates(h: Family, src: GenericSource) -> StarPredicates:
    """Dominance against the k-star with apex 1, with the two top reduced Betti numbers."""
    star = star_family(h.n, h.k, 1)
    b = reduced_betti(complex_of(h))
    return StarPredicates(dominates(h, star, src), dominates(star, h, src), b[h.k - 2], b[h.k - 1])
