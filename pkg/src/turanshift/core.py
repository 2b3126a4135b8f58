"""k-sets, uniform families, term orders and the explicit extremal families.

A k-set is a strictly increasing tuple of 1-based vertices.  Families are
immutable and iterate in lexicographic order so that logs and files are
reproducible.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

KSet = tuple[int, ...]


def kset(elements: Iterable[int], n: int | None = None) -> KSet:
    """Canonicalise ``elements`` into a sorted k-set, validating range and distinctness."""
    s = tuple(sorted(int(e) for e in elements))
    if not s:
        raise ValueError("a k-set needs at least one element")
    if len(set(s)) != len(s):
        raise ValueError(f"repeated vertex in {s}")
    if s[0] < 1 or (n is not None and s[-1] > n):
        raise ValueError(f"{s} is not a subset of [1, {n}]")
    return s


def mask(s: KSet) -> int:
    """Bit ``v - 1`` is set for each vertex ``v``."""
    m = 0
    for v in s:
        m |= 1 << (v - 1)
    return m


def all_ksets(n: int, k: int) -> list[KSet]:
    return list(combinations(range(1, n + 1), k))


@dataclass(frozen=True)
class Family:
    """A k-uniform hypergraph on ``[n]``."""

    n: int
    k: int
    members: frozenset[KSet]

    def __init__(self, n: int, k: int, members: Iterable[Iterable[int]] = ()):
        if n < 0 or k < 0:
            raise ValueError("n and k must be non-negative")
        ms = set()
        for m in members:
            s = kset(m, n)
            if len(s) != k:
                raise ValueError(f"{s} has size {len(s)}, expected {k}")
            ms.add(s)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "members", frozenset(ms))

    def __iter__(self) -> Iterator[KSet]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, s) -> bool:
        return tuple(s) in self.members

    def __repr__(self) -> str:
        body = ",".join("".join(map(str, s)) if self.n < 10 else "-".join(map(str, s)) for s in self)
        return f"Family(n={self.n}, k={self.k}, {{{body}}})"

    def sorted(self, order: "TermOrder") -> list[KSet]:
        return sorted(self.members, key=order.key)

    def issubset(self, other: "Family") -> bool:
        return self.members <= other.members

    def issuperset(self, other: "Family") -> bool:
        return self.members >= other.members

    def with_members(self, members: Iterable[Iterable[int]]) -> "Family":
        return Family(self.n, self.k, members)

    def complement(self) -> "Family":
        return Family(self.n, self.k, (s for s in combinations(range(1, self.n + 1), self.k)
                                       if s not in self.members))


def graph(n: int, edges: Iterable[Iterable[int]]) -> Family:
    return Family(n, 2, edges)


def complete_family(n: int, k: int) -> Family:
    return Family(n, k, combinations(range(1, n + 1), k))


def star_family(n: int, k: int, apex: int = 1) -> Family:
    """All k-subsets of ``[n]`` containing ``apex``."""
    return Family(n, k, (s for s in combinations(range(1, n + 1), k) if apex in s))


# -- componentwise order ------------------------------------------------------


class Relation(enum.Enum):
    EQUAL = "Equal"
    LESS_OR_EQUAL = "LessOrEqual"
    GREATER_OR_EQUAL = "GreaterOrEqual"
    INCOMPARABLE = "Incomparable"


def _check_same_size(s: KSet, t: KSet) -> None:
    if len(s) != len(t):
        raise ValueError(f"size mismatch: {s} vs {t}")


def partial_compare(s: KSet, t: KSet) -> Relation:
    _check_same_size(s, t)
    if s == t:
        return Relation.EQUAL
    if all(a <= b for a, b in zip(s, t)):
        return Relation.LESS_OR_EQUAL
    if all(a >= b for a, b in zip(s, t)):
        return Relation.GREATER_OR_EQUAL
    return Relation.INCOMPARABLE


# -- term orders --------------------------------------------------------------


class Cmp(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


class TermOrder(enum.Enum):
    """Total orders on equal-size k-sets extending the componentwise order.

    ``SUMLEX`` orders by coordinate sum, ties broken lexicographically.
    ``CTRIPLE`` orders triples ``abc`` by ``a+c``, then ``2a+b``, then ``a``.
    """

    LEX = "lex"
    REVLEX = "revlex"
    SUMLEX = "sumlex"
    CTRIPLE = "ctriple"

    def check_k(self, k: int) -> None:
        if self is TermOrder.CTRIPLE and k != 3:
            raise ValueError(f"ctriple order is defined on 3-sets only, got k={k}")

    def key(self, s: KSet):
        if self is TermOrder.LEX:
            return s
        if self is TermOrder.REVLEX:
            return s[::-1]
        if self is TermOrder.SUMLEX:
            return (sum(s), s)
        self.check_k(len(s))
        a, b, c = s
        return (a + c, 2 * a + b, a)

    def sorted_ksets(self, n: int, k: int) -> list[KSet]:
        self.check_k(k)
        return sorted(combinations(range(1, n + 1), k), key=self.key)


def order_compare(order: TermOrder, s: KSet, t: KSet) -> Cmp:
    _check_same_size(s, t)
    order.check_k(len(s))
    ks, kt = order.key(s), order.key(t)
    if ks == kt:
        return Cmp.EQUAL
    return Cmp.LESS if ks < kt else Cmp.GREATER


MAX_VALIDATE_N = 12


def validate_term_order(order: TermOrder, n: int, k: int, max_n: int = MAX_VALIDATE_N) -> bool:
    """Exhaustively check that ``order`` is a linear extension of the componentwise order."""
    if n > max_n:
        raise ValueError(f"n={n} exceeds exhaustive bound {max_n}")
    sets = all_ksets(n, k)
    keys = {s: order.key(s) for s in sets}
    if len(set(keys.values())) != len(sets):
        return False
    for s in sets:
        for t in sets:
            if s != t and all(a <= b for a, b in zip(s, t)) and not keys[s] < keys[t]:
                return False
    return True


def family_order_compare(f: Family, g: Family, order: TermOrder) -> Cmp:
    """Compare two families by the owner of the least element of their symmetric difference."""
    if (f.n, f.k) != (g.n, g.k):
        raise ValueError("families over different (n, k)")
    diff = f.members ^ g.members
    if not diff:
        return Cmp.EQUAL
    least = min(diff, key=order.key)
    return Cmp.LESS if least in f.members else Cmp.GREATER


def m_value(order: TermOrder, s: KSet, family: Family) -> int:
    """Number of members of ``family`` that are ``<=`` ``s`` in ``order``."""
    if family.k != len(s):
        raise ValueError("family and k-set have different sizes")
    ks = order.key(s)
    return sum(1 for t in family.members if order.key(t) <= ks)


# -- shiftedness ----------------------------------------------------------------


def shift_violation(family: Family) -> tuple[KSet, KSet] | None:
    """Return ``(F, S)`` with ``F`` in the family and its elementary shift ``S`` missing, or None."""
    for f in family:
        fs = set(f)
        for j in f:
            for i in range(1, j):
                if i not in fs:
                    s = tuple(sorted((fs - {j}) | {i}))
                    if s not in family.members:
                        return f, s
    return None


def is_shifted(family: Family) -> bool:
    return shift_violation(family) is None


# -- permutations ---------------------------------------------------------------


@dataclass(frozen=True)
class Permutation:
    """A bijection of ``[n]``; ``images[v - 1]`` is the image of ``v``."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(v) for v in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"{imgs} is not a permutation of [1, {len(imgs)}]")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_mapping(cls, n: int, mapping: dict[int, int]) -> "Permutation":
        return cls(tuple(mapping.get(v, v) for v in range(1, n + 1)))

    @classmethod
    def transpositions(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Permutation":
        imgs = list(range(1, n + 1))
        for a, b in pairs:
            imgs[a - 1], imgs[b - 1] = b, a
        return cls(tuple(imgs))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self ∘ other``: apply ``other`` first."""
        return Permutation(tuple(self(other(v)) for v in range(1, self.n + 1)))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for v, w in enumerate(self.images, start=1):
            inv[w - 1] = v
        return Permutation(tuple(inv))

    def is_involution(self) -> bool:
        return all(self(self(v)) == v for v in range(1, self.n + 1))

    def apply(self, s: Iterable[int]) -> KSet:
        return tuple(sorted(self(v) for v in s))


def apply_permutation(family: Family, perm: Permutation) -> Family:
    if perm.n != family.n:
        raise ValueError(f"permutation on {perm.n} points applied to a family on {family.n}")
    return Family(family.n, family.k, (perm.apply(s) for s in family.members))


# -- the explicit families and counting formulas ----------------------------------


def b_family(n: int) -> Family:
    """Edges ``ab`` with ``a + b <= n``."""
    if n < 2:
        raise ValueError("b_family needs n >= 2")
    return Family(n, 2, ((a, b) for a, b in combinations(range(1, n + 1), 2) if a + b <= n))


def c_family(n: int) -> Family:
    """Triples ``abc`` with ``a + c <= n`` and ``2a + b <= n``."""
    if n < 3:
        raise ValueError("c_family needs n >= 3")
    return Family(n, 3, ((a, b, c) for a, b, c in combinations(range(1, n + 1), 3)
                         if a + c <= n and 2 * a + b <= n))


def turan_edge_count(n: int) -> int:
    """Edges of two disjoint cliques of sizes floor(n/2) and ceil(n/2)."""
    if n < 1:
        raise ValueError("n must be positive")
    return comb(n // 2, 2) + comb((n + 1) // 2, 2)


def balanced_sizes(n: int) -> tuple[int, int, int]:
    q, r = divmod(n, 3)
    return tuple([q + 1] * r + [q] * (3 - r))


def h_value(n: int) -> int:
    """The conjectured (3,4)-Turán minimum; the part-size and closed forms are cross-checked."""
    if n < 3:
        raise ValueError("h_value needs n >= 3")
    s1, s2, s3 = balanced_sizes(n)
    by_parts = (comb(s1, 3) + comb(s2, 3) + comb(s3, 3)
                + s1 * comb(s2, 2) + s2 * comb(s3, 2) + s3 * comb(s1, 2))
    q = n // 3
    closed = q * comb(n - q - 1, 2)
    assert by_parts == closed, (n, by_parts, closed)
    return closed


def count_meeting_prefix(family: Family, r: int) -> int:
    """Members meeting ``[r]``."""
    if not 0 <= r <= family.n:
        raise ValueError(f"r={r} outside [0, {family.n}]")
    return sum(1 for s in family.members if s[0] <= r)


def meeting_prefix_family(n: int, k: int, r: int) -> Family:
    """All k-subsets of ``[n]`` meeting ``[r]``."""
    return Family(n, k, (s for s in combinations(range(1, n + 1), k) if s[0] <= r))
