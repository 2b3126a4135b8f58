"""Dominance between uniform families via compound matrices.

The generic matrix of indeterminates is replaced by random matrices over a
large prime field.  Rank can only drop under specialisation, so a full-rank
trial certifies dominance; repeated failures are only probable evidence
against it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .core import Family, KSet, TermOrder, meeting_prefix_family
from .linalg import FieldMatrix, PrimeModulus, det_mod_p, random_invertible, rank_mod_p


@dataclass(frozen=True)
class GenericSource:
    """Reproducible stand-in for a generic matrix: prime, seed and trial budget."""

    prime: PrimeModulus = field(default_factory=PrimeModulus)
    seed: int = 0
    trials: int = 3

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 bits")

    @property
    def p(self) -> int:
        return self.prime.p

    def rng(self, trial: int) -> np.random.Generator:
        return np.random.default_rng([self.seed, trial])

    def matrix(self, n: int, trial: int) -> FieldMatrix:
        return random_invertible(n, self.rng(trial), self.prime)

    def matrices(self, n: int):
        for t in range(self.trials):
            yield self.matrix(n, t)

    def escalated(self, trials: int = 10, prime: PrimeModulus | None = None) -> "GenericSource":
        return GenericSource(prime or self.prime, self.seed, max(trials, self.trials))


class Outcome(enum.Enum):
    CERTIFIED_YES = "CertifiedYes"
    PROBABLE_NO = "ProbableNo"


@dataclass(frozen=True)
class Verdict:
    outcome: Outcome
    achieved_rank: int
    required_rank: int
    trials_used: int

    def __bool__(self) -> bool:
        return self.outcome is Outcome.CERTIFIED_YES

    def as_dict(self) -> dict:
        return {"outcome": self.outcome.value, "achieved_rank": self.achieved_rank,
                "required_rank": self.required_rank, "trials_used": self.trials_used}


def minor_det(a: FieldMatrix, s: KSet, t: KSet) -> int:
    """Determinant of rows ``s`` and columns ``t`` of ``a`` (1-based)."""
    if len(s) != len(t):
        raise ValueError(f"minor of unequal index sets {s}, {t}")
    if any(not 1 <= v <= a.rows for v in s) or any(not 1 <= v <= a.cols for v in t):
        raise ValueError(f"minor indices {s}, {t} out of range for {a.shape}")
    p = a.p
    k = len(s)
    r = [a.row(i - 1) for i in s]
    c = [j - 1 for j in t]
    if k == 1:
        return r[0][c[0]]
    if k == 2:
        return (r[0][c[0]] * r[1][c[1]] - r[0][c[1]] * r[1][c[0]]) % p
    if k == 3:
        (a0, a1, a2), (b0, b1, b2), (d0, d1, d2) = ([row[j] for j in c] for row in r)
        return (a0 * (b1 * d2 - b2 * d1) - a1 * (b0 * d2 - b2 * d0) + a2 * (b0 * d1 - b1 * d0)) % p
    return det_mod_p(FieldMatrix([[row[j] for j in c] for row in r], p))


class MinorTable:
    """Memoised minors of one fixed matrix."""

    def __init__(self, a: FieldMatrix):
        self.a = a
        self._cache: dict[tuple[KSet, KSet], int] = {}

    def __call__(self, s: KSet, t: KSet) -> int:
        key = (s, t)
        v = self._cache.get(key)
        if v is None:
            v = self._cache[key] = minor_det(self.a, s, t)
        return v

    def row(self, s: KSet, cols) -> list[int]:
        return [self(s, t) for t in cols]


def _check_compatible(f1: Family, f2: Family) -> None:
    if f1.k != f2.k:
        raise ValueError(f"k mismatch: {f1.k} vs {f2.k}")
    if f1.n != f2.n:
        raise ValueError(f"n mismatch: {f1.n} vs {f2.n}")


def dominance_matrix(a: FieldMatrix, cols: Family, rows: Family, order: TermOrder = TermOrder.LEX,
                     minors: MinorTable | None = None) -> FieldMatrix:
    """Minors of ``a`` with rows indexed by ``rows`` and columns by ``cols``."""
    _check_compatible(cols, rows)
    if a.rows != cols.n or a.cols != cols.n:
        raise ValueError(f"matrix is {a.shape}, families live on [{cols.n}]")
    minors = minors or MinorTable(a)
    cs = cols.sorted(order)
    return FieldMatrix([minors.row(s, cs) for s in rows.sorted(order)], a.p, cols=len(cs))


def _verdict(best: int, required: int, trials: int) -> Verdict:
    outcome = Outcome.CERTIFIED_YES if best == required else Outcome.PROBABLE_NO
    return Verdict(outcome, best, required, trials)


def dominates(f1: Family, f2: Family, src: GenericSource) -> Verdict:
    """Does ``f1`` dominate ``f2``?  (Rows ``f2``, columns ``f1`` must reach rank ``|f2|``.)"""
    _check_compatible(f1, f2)
    need = len(f2)
    if need == 0:
        return _verdict(0, 0, 0)
    best = 0
    for t, a in enumerate(src.matrices(f1.n), start=1):
        best = max(best, rank_mod_p(dominance_matrix(a, f1, f2)))
        # more trials cannot help once the column count caps the rank
        if best == need or need > len(f1):
            return _verdict(best, need, t)
    return _verdict(best, need, src.trials)


def weakly_isomorphic(f1: Family, f2: Family, src: GenericSource) -> tuple[Verdict, Verdict]:
    """Verdicts for ``f1 -> f2`` and ``f2 -> f1``, each trial sharing one matrix."""
    _check_compatible(f1, f2)
    need = [len(f2), len(f1)]
    best = [0, 0]
    used = [0, 0]
    pairs = [(f1, f2), (f2, f1)]
    for a in src.matrices(f1.n):
        minors = MinorTable(a)
        for d, (cols, rows) in enumerate(pairs):
            if best[d] == need[d]:
                continue
            used[d] += 1
            if need[d]:
                best[d] = max(best[d], rank_mod_p(dominance_matrix(a, cols, rows, minors=minors)))
        if best == need:
            break
    return _verdict(best[0], need[0], used[0]), _verdict(best[1], need[1], used[1])


@dataclass(frozen=True)
class RankReport:
    """Best rank seen over the trials: a certified lower bound on the generic rank."""

    rank: int
    upper_bound: int
    trials_used: int

    def __int__(self) -> int:
        return self.rank

    @property
    def certified_exact(self) -> bool:
        return self.rank == self.upper_bound


def rank_r(h: Family, r: int, src: GenericSource) -> RankReport:
    """Rank of the compound submatrix with rows meeting ``[r]`` and columns ``h``."""
    if not 1 <= r <= h.n:
        raise ValueError(f"r={r} outside [1, {h.n}]")
    rows = meeting_prefix_family(h.n, h.k, r)
    cap = min(len(rows), len(h))
    best, used = 0, 0
    for a in src.matrices(h.n):
        used += 1
        if cap:
            best = max(best, rank_mod_p(dominance_matrix(a, h, rows)))
        if best == cap:
            break
    return RankReport(best, cap, used)
