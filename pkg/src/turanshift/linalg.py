"""Exact linear algebra: dense matrices over a large prime field, plus
fraction-free integer rank.

Residues are plain Python ints; at the sizes used here (a few hundred rows)
that is fast enough and avoids any overflow reasoning.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import gmpy2
import numpy as np

DEFAULT_PRIME = 2**61 - 1
SECOND_PRIME = 2**62 - 57


@dataclass(frozen=True)
class PrimeModulus:
    """A prime ``2**60 < p < 2**63``.

    The upper limit keeps residues drawable as ``int64`` by numpy's generator.
    """

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        p = int(self.p)
        if not 2**60 < p < 2**63:
            raise ValueError(f"modulus {p} outside (2^60, 2^63)")
        if p == DEFAULT_PRIME:
            # Mersenne exponent 61 is prime and 2^61-1 is a known Mersenne prime;
            # Lucas-Lehmer makes that check deterministic.
            if not _lucas_lehmer(61):
                raise AssertionError("2^61-1 failed Lucas-Lehmer")
        elif not gmpy2.is_prime(p, 40):
            raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "p", p)


def _lucas_lehmer(e: int) -> bool:
    m = (1 << e) - 1
    s = 4
    for _ in range(e - 2):
        s = (s * s - 2) % m
    return s == 0


class FieldMatrix:
    """Immutable dense matrix of residues modulo ``p``."""

    __slots__ = ("rows", "cols", "p", "_data")

    def __init__(self, entries: Sequence[Sequence[int]], p: int = DEFAULT_PRIME, cols: int | None = None):
        p = int(p.p) if isinstance(p, PrimeModulus) else int(p)
        data = tuple(tuple(int(x) % p for x in row) for row in entries)
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged matrix")
        self.rows, self.cols, self.p, self._data = len(data), cols, p, data

    @classmethod
    def identity(cls, n: int, p: int = DEFAULT_PRIME) -> "FieldMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], p)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int = DEFAULT_PRIME) -> "FieldMatrix":
        return cls([[0] * cols for _ in range(rows)], p, cols=cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.cols != other.rows or self.p != other.p:
            raise ValueError("incompatible matrices")
        cols = list(zip(*other._data)) if other.rows else [()] * other.cols
        return FieldMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._data],
                           self.p, cols=other.cols)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FieldMatrix) and self.p == other.p
                and self.shape == other.shape and self._data == other._data)

    def __hash__(self):
        return hash((self.p, self.shape, self._data))

    def __repr__(self) -> str:
        return f"FieldMatrix({self.tolist()}, p={self.p})"


def _eliminate(m: list[list[int]], p: int, ncols: int) -> tuple[int, int]:
    """In-place forward elimination; returns (rank, sign of row swaps)."""
    rank, sign = 0, 1
    nrows = len(m)
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][c]), None)
        if piv is None:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
            sign = -sign
        prow = m[rank]
        inv = pow(prow[c], p - 2, p)
        for r in range(rank + 1, nrows):
            row = m[r]
            f = row[c]
            if f:
                f = f * inv % p
                for cc in range(c, ncols):
                    if prow[cc]:
                        row[cc] = (row[cc] - f * prow[cc]) % p
        rank += 1
        if rank == nrows:
            break
    return rank, sign


def rank_mod_p(m: FieldMatrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return _eliminate(m.tolist(), m.p, m.cols)[0]


def det_mod_p(m: FieldMatrix) -> int:
    if m.rows != m.cols:
        raise ValueError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n, p = m.rows, m.p
    if n == 0:
        return 1
    work = m.tolist()
    rank, sign = _eliminate(work, p, n)
    if rank < n:
        return 0
    d = sign % p
    for i in range(n):
        d = d * work[i][i] % p
    return d


@dataclass
class EchelonState:
    """Reduced row-echelon basis of a growing row space.

    ``basis`` maps pivot column to a basis row whose pivot entry is 1 and which
    is zero in every other pivot column.
    """

    width: int
    p: int = DEFAULT_PRIME
    basis: dict[int, list[int]] = field(default_factory=dict)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def reduce(self, row: Sequence[int]) -> list[int]:
        if len(row) != self.width:
            raise ValueError(f"row of width {len(row)} inserted into width {self.width}")
        p = self.p
        v = [x % p for x in row]
        for c, b in self.basis.items():
            f = v[c]
            if f:
                for j, bj in enumerate(b):
                    if bj:
                        v[j] = (v[j] - f * bj) % p
        return v

    def contains(self, row: Sequence[int]) -> bool:
        return not any(self.reduce(row))

    def insert(self, row: Sequence[int]) -> bool:
        v = self.reduce(row)
        c = next((j for j, x in enumerate(v) if x), None)
        if c is None:
            return False
        p = self.p
        inv = pow(v[c], p - 2, p)
        v = [x * inv % p for x in v]
        for b in self.basis.values():
            f = b[c]
            if f:
                for j, vj in enumerate(v):
                    if vj:
                        b[j] = (b[j] - f * vj) % p
        self.basis[c] = v
        return True


def echelon_insert(state: EchelonState, row: Sequence[int]) -> bool:
    """True iff ``row`` enlarged the row space (the state is updated either way)."""
    return state.insert(row)


class IntMatrix:
    """Immutable integer matrix with arbitrary-precision entries."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Sequence[Sequence[int]], cols: int | None = None):
        data = tuple(tuple(int(x) for x in row) for row in entries)
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged matrix")
        self.rows, self.cols, self._data = len(data), cols, data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self._data[i][j]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.tolist(), dtype=object).reshape(self.rows, self.cols)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("incompatible matrices")
        cols = list(zip(*other._data)) if other.rows else [()] * other.cols
        return IntMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._data],
                         cols=other.cols)

    def __repr__(self) -> str:
        return f"IntMatrix({self.tolist()})"


def rank_exact_int(m: IntMatrix) -> int:
    """Rank over the rationals by Bareiss fraction-free elimination."""
    a = m.tolist()
    nrows, ncols = m.rows, m.cols
    rank, prev = 0, 1
    for c in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        pr = a[rank]
        pv = pr[c]
        for r in range(rank + 1, nrows):
            row = a[r]
            f = row[c]
            for cc in range(c + 1, ncols):
                # exact division: Sylvester's identity
                row[cc] = (pv * row[cc] - f * pr[cc]) // prev
            row[c] = 0
        prev = pv
        rank += 1
    return rank


def random_matrix(rows: int, cols: int, rng: np.random.Generator, p: int = DEFAULT_PRIME) -> FieldMatrix:
    vals = rng.integers(0, p, size=(rows, cols), dtype=np.int64)
    return FieldMatrix([[int(x) for x in r] for r in vals], p, cols=cols)


def random_invertible(n: int, rng: np.random.Generator, p: PrimeModulus | int = DEFAULT_PRIME) -> FieldMatrix:
    """Uniform entries, resampled until nonsingular."""
    p = int(p.p) if isinstance(p, PrimeModulus) else int(p)
    while True:
        a = random_matrix(n, n, rng, p)
        if det_mod_p(a):
            return a
