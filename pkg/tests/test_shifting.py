from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turanshift.constructions import enumerate_mantel_covers, perfect_matching, turan_graph
from turanshift.core import (Cmp, Family, Permutation, TermOrder, apply_permutation, b_family,
                             complete_family, family_order_compare, graph, is_shifted, m_value)
from turanshift.dominance import GenericSource, weakly_isomorphic
from turanshift.linalg import FieldMatrix
from turanshift.shifting import (ElementaryMap, MantelViolation, comb_shift, comb_shift_step,
                                 comb_shift_turan, elementary_shift, elementary_shift_matrix,
                                 exterior_shift, exterior_shift_with, turan_labeling)

from conftest import C5, G1, G2, family_from_mask

ORDERS = [TermOrder.LEX, TermOrder.REVLEX, TermOrder.SUMLEX]


def test_c5_golden_shifts(src):
    lex = exterior_shift(C5, TermOrder.LEX, src)
    assert lex.family == G1 and lex.shifted_flag and lex.unanimous
    rev = exterior_shift(C5, TermOrder.REVLEX, src)
    assert rev.family == G2 and rev.shifted_flag and rev.unanimous


def test_shifted_family_is_fixed(src):
    for order in ORDERS:
        assert exterior_shift(b_family(8), order, src).family == b_family(8)
    a = src.matrix(5, 0)
    assert exterior_shift_with(G1, TermOrder.LEX, a) == G1


def test_single_edge_goes_to_12():
    for seed in range(3):
        a = GenericSource(seed=seed).matrix(6, 0)
        assert exterior_shift_with(graph(6, [(4, 6)]), TermOrder.LEX, a).members == {(1, 2)}


def test_exterior_shift_with_rejects_bad_matrices():
    with pytest.raises(ValueError):
        exterior_shift_with(C5, TermOrder.LEX, FieldMatrix.identity(4))
    with pytest.raises(ValueError):
        exterior_shift_with(C5, TermOrder.LEX, FieldMatrix.zeros(5, 5))
    with pytest.raises(ValueError):
        exterior_shift_with(C5, TermOrder.CTRIPLE, FieldMatrix.identity(5))


def test_comb_shift_step_examples():
    assert comb_shift_step(graph(3, [(2, 3)]), 1, 2).members == {(1, 3)}
    assert comb_shift_step(graph(3, [(1, 3), (2, 3)]), 1, 2).members == {(1, 3), (2, 3)}
    assert len(comb_shift_step(C5, 1, 3)) == 5
    with pytest.raises(ValueError):
        comb_shift_step(C5, 3, 3)


def test_comb_shift_examples():
    assert comb_shift(G1) == (G1, [])
    res, log = comb_shift(C5)
    assert len(res) == 5 and is_shifted(res) and log
    assert comb_shift(graph(3, [(2, 3)]))[0].members == {(1, 2)}
    # explicit pivots: only the effective ones are logged
    res, log = comb_shift(graph(3, [(2, 3)]), [(1, 2), (1, 2), (2, 3)])
    assert res.members == {(1, 2)} and log == [(1, 2), (2, 3)]


def random_family(seed, n=None, k=None):
    rng = np.random.default_rng(seed)
    n = n or int(rng.integers(2, 7))
    k = k or int(rng.integers(1, min(3, n) + 1))
    from turanshift.campaigns import random_family as rf
    return rf(n, k, rng)


@pytest.mark.parametrize("seed", range(25))
def test_exterior_shift_properties(seed, src):
    f = random_family(seed)
    order = ORDERS[seed % 3]
    res = exterior_shift(f, order, src)
    assert len(res.family) == len(f)
    assert res.shifted_flag and is_shifted(res.family)
    assert exterior_shift(res.family, order, src).family == res.family
    pi = Permutation(tuple(int(v) + 1 for v in np.random.default_rng(seed).permutation(f.n)))
    assert exterior_shift(apply_permutation(f, pi), order, src).family == res.family
    assert all(weakly_isomorphic(f, res.family, src))
    comb_res, _ = comb_shift(f)
    assert family_order_compare(res.family, comb_res, order) is not Cmp.GREATER


@pytest.mark.parametrize("seed", range(10))
def test_m_value_inequality_under_elementary_maps(seed, src):
    f = random_family(100 + seed)
    order = ORDERS[seed % 3]
    rng = np.random.default_rng(seed)
    i, j = sorted(int(v) for v in rng.choice(np.arange(1, f.n + 1), size=2, replace=False))
    moved = elementary_shift(f, i, j, order)
    ext = exterior_shift(f, order, src).family
    ext_moved = exterior_shift(moved, order, src).family
    for s in order.sorted_ksets(f.n, f.k):
        assert m_value(order, s, ext) >= m_value(order, s, ext_moved)


def test_elementary_matrix_example():
    assert elementary_shift_matrix(ElementaryMap(1, 2, 2)) == FieldMatrix([[1, 1], [0, 1]])
    with pytest.raises(ValueError):
        ElementaryMap(2, 2, 3)


def test_elementary_shift_on_single_edge():
    assert elementary_shift(graph(3, [(2, 3)]), 1, 2) == comb_shift_step(graph(3, [(2, 3)]), 1, 2)


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 6), st.integers(1, 3), st.data())
def test_elementary_shift_equals_combinatorial_step(n, k, data):
    k = min(k, n)
    m = data.draw(st.integers(0, 2 ** comb(n, k) - 1))
    f = family_from_mask(n, k, m)
    i = data.draw(st.integers(1, n - 1))
    j = data.draw(st.integers(i + 1, n))
    order = data.draw(st.sampled_from(ORDERS))
    assert elementary_shift(f, i, j, order) == comb_shift_step(f, i, j)


def test_turan_labeling_examples():
    assert turan_labeling(complete_family(5, 2)) == Permutation.identity(5)
    perm = turan_labeling(graph(2, []))
    assert sorted(perm.images) == [1, 2]
    with pytest.raises(MantelViolation) as err:
        turan_labeling(perfect_matching(6))
    assert len(err.value.triple) == 3


@pytest.mark.parametrize("g", [complete_family(4, 2), perfect_matching(6).complement(), turan_graph(6)],
                         ids=["K4", "co-matching", "T(6)"])
def test_comb_shift_turan_examples(g):
    res, perm, log = comb_shift_turan(g)
    assert res.issuperset(b_family(g.n)) and len(res) == len(g)
    if g == turan_graph(6):
        assert len(res) == len(b_family(6)) == 6


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_comb_shift_turan_contains_b_for_all_covers(n):
    b = b_family(n)
    for g in enumerate_mantel_covers(n):
        res, _, _ = comb_shift_turan(g)
        assert res.issuperset(b) and len(res) == len(g), g
