from functools import cmp_to_key
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turanshift.core import (Cmp, Family, Permutation, Relation, TermOrder, apply_permutation, b_family,
                             c_family, count_meeting_prefix, family_order_compare, graph, h_value,
                             is_shifted, kset, m_value, mask, order_compare, partial_compare,
                             shift_violation, turan_edge_count, validate_term_order)

from conftest import C5, G1, G2, family_from_mask


def test_kset_canonicalises_and_validates():
    assert kset([3, 1]) == (1, 3)
    assert mask((1, 3)) == 0b101
    with pytest.raises(ValueError):
        kset([1, 1])
    with pytest.raises(ValueError):
        kset([0, 2])
    with pytest.raises(ValueError):
        kset([2, 5], n=4)
    with pytest.raises(ValueError):
        Family(4, 2, [(1, 2, 3)])


@pytest.mark.parametrize("s, t, rel", [
    ((1, 3), (2, 3), Relation.LESS_OR_EQUAL),
    ((1, 4), (2, 3), Relation.INCOMPARABLE),
    ((2, 3), (2, 3), Relation.EQUAL),
    ((2, 4), (1, 3), Relation.GREATER_OR_EQUAL),
])
def test_partial_compare(s, t, rel):
    assert partial_compare(s, t) is rel


def test_partial_compare_size_mismatch():
    with pytest.raises(ValueError):
        partial_compare((1, 2), (1, 2, 3))


def test_lex_and_revlex_examples():
    assert order_compare(TermOrder.LEX, (1, 4), (2, 3)) is Cmp.LESS
    assert order_compare(TermOrder.REVLEX, (1, 4), (2, 3)) is Cmp.GREATER
    assert order_compare(TermOrder.SUMLEX, (1, 4), (2, 3)) is Cmp.LESS
    with pytest.raises(ValueError):
        order_compare(TermOrder.CTRIPLE, (1, 2), (1, 3))


def _symmetric_difference_oracle(kind):
    def cmp(s, t):
        d = set(s) ^ set(t)
        if not d:
            return 0
        if kind == "lex":
            return -1 if min(d) in s else 1
        return -1 if max(d) in t else 1
    return cmp


@pytest.mark.parametrize("order, kind", [(TermOrder.LEX, "lex"), (TermOrder.REVLEX, "revlex")])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_lex_revlex_match_symmetric_difference_rule(order, kind, k):
    expected = sorted(combinations(range(1, 8), k), key=cmp_to_key(_symmetric_difference_oracle(kind)))
    assert order.sorted_ksets(7, k) == expected


def _ctriple_less(s, t):
    (a, b, c), (x, y, z) = s, t
    return (a + c < x + z or (a + c == x + z and 2 * a + b < 2 * x + y)
            or (a + c == x + z and 2 * a + b == 2 * x + y and a < x))


def test_ctriple_against_literal_definition():
    cmp = cmp_to_key(lambda s, t: -1 if _ctriple_less(s, t) else (1 if _ctriple_less(t, s) else 0))
    brute = sorted(combinations(range(1, 6), 3), key=cmp)
    assert TermOrder.CTRIPLE.sorted_ksets(5, 3) == brute
    # read off the enumeration: 134 precedes 125
    assert brute.index((1, 3, 4)) < brute.index((1, 2, 5))
    assert order_compare(TermOrder.CTRIPLE, (1, 2, 5), (1, 3, 4)) is Cmp.GREATER


@pytest.mark.parametrize("order, n, k", [
    (TermOrder.LEX, 6, 2), (TermOrder.SUMLEX, 8, 2), (TermOrder.CTRIPLE, 8, 3),
    (TermOrder.REVLEX, 8, 3), (TermOrder.LEX, 8, 4), (TermOrder.SUMLEX, 7, 3),
])
def test_validate_term_order(order, n, k):
    assert validate_term_order(order, n, k)


def test_validate_term_order_refuses_large_n():
    with pytest.raises(ValueError):
        validate_term_order(TermOrder.LEX, 13, 2)


def test_shifted_examples():
    assert is_shifted(G1) and is_shifted(G2)
    assert not is_shifted(C5)
    assert shift_violation(C5) is not None
    assert is_shifted(b_family(7))


@pytest.mark.parametrize("n, expected", [
    (5, {(1, 2), (1, 3), (1, 4), (2, 3)}),
    (6, {(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4)}),
    (2, set()),
])
def test_b_family(n, expected):
    assert b_family(n).members == expected


def test_c_family_examples():
    assert c_family(6).members == {(1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 3, 4), (1, 3, 5), (1, 4, 5)}
    assert c_family(4).members == {(1, 2, 3)}
    with pytest.raises(ValueError):
        c_family(2)


@pytest.mark.parametrize("n, expected", [(5, 4), (6, 6), (1, 0), (7, 9)])
def test_turan_edge_count(n, expected):
    assert turan_edge_count(n) == expected


@pytest.mark.parametrize("n, expected", [(3, 0), (4, 1), (6, 6), (9, 30), (10, 45)])
def test_h_value(n, expected):
    assert h_value(n) == expected


def test_h_value_is_max_over_part_sizes():
    for n in range(3, 31):
        assert h_value(n) == max(s * comb(n - s - 1, 2) for s in range(0, n - 2))


def test_identities_up_to_30():
    for n in range(3, 31):
        c = c_family(n)
        assert len(c) == h_value(n)
        assert len(b_family(n)) == turan_edge_count(n)
        for r in range(0, n // 3 + 1):
            assert count_meeting_prefix(c, r) == r * comb(n - r - 1, 2)
        for r in range(n // 3 + 1, n + 1):
            assert count_meeting_prefix(c, r) == len(c) >= r * comb(max(n - r - 1, 0), 2)


def test_count_meeting_prefix_examples():
    assert count_meeting_prefix(c_family(9), 3) == 30
    assert count_meeting_prefix(c_family(9), 0) == 0
    assert count_meeting_prefix(c_family(9), 9) == len(c_family(9))


def test_b_and_c_are_shifted():
    for n in range(3, 21):
        assert is_shifted(b_family(n)) and is_shifted(c_family(n))


def _ctriple_intruders(n):
    c = c_family(n).members
    seq = TermOrder.CTRIPLE.sorted_ksets(n, 3)
    last = max(seq.index(s) for s in c) if c else -1
    return [s for s in seq[:last + 1] if s not in c]


def test_c_family_is_ctriple_initial_segment_up_to_8():
    for n in range(3, 9):
        assert _ctriple_intruders(n) == []


def test_ctriple_initial_segment_breaks_at_9():
    # a+c = 8 < 9 puts 345 ahead of 128, although 2a+b = 10 > 9 excludes it from C(9)
    assert (3, 4, 5) in _ctriple_intruders(9)
    assert order_compare(TermOrder.CTRIPLE, (3, 4, 5), (1, 2, 8)) is Cmp.LESS
    assert (1, 2, 8) in c_family(9) and (3, 4, 5) not in c_family(9)


def test_family_order_compare_examples():
    assert family_order_compare(G1, G2, TermOrder.LEX) is Cmp.LESS
    assert family_order_compare(G1, G1, TermOrder.REVLEX) is Cmp.EQUAL
    other = graph(6, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 5)])
    assert family_order_compare(b_family(6), other, TermOrder.SUMLEX) is Cmp.LESS


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**10 - 1), st.integers(0, 2**10 - 1),
       st.sampled_from([TermOrder.LEX, TermOrder.REVLEX, TermOrder.SUMLEX]))
def test_family_order_compare_antisymmetric(m1, m2, order):
    f, g = family_from_mask(5, 2, m1), family_from_mask(5, 2, m2)
    a, b = family_order_compare(f, g, order), family_order_compare(g, f, order)
    assert a == -b
    assert (a is Cmp.EQUAL) == (f == g)


def test_m_value():
    k = graph(3, [(1, 2), (1, 3), (2, 3)])
    assert m_value(TermOrder.LEX, (1, 3), k) == 2
    top = TermOrder.LEX.sorted_ksets(5, 2)[-1]
    assert m_value(TermOrder.LEX, top, C5) == 5
    assert m_value(TermOrder.LEX, (1, 2), graph(5, [(3, 4)])) == 0


def test_permutations():
    assert apply_permutation(graph(3, [(1, 2), (1, 3)]), Permutation.identity(3)) == graph(3, [(1, 2), (1, 3)])
    swap = Permutation.transpositions(3, [(1, 3)])
    assert apply_permutation(graph(3, [(1, 2)]), swap).members == {(2, 3)}
    assert swap.is_involution()
    cyc = Permutation((2, 3, 1))
    assert not cyc.is_involution()
    assert cyc.compose(cyc.inverse()) == Permutation.identity(3)
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


@settings(max_examples=50, deadline=None)
@given(st.permutations(range(1, 6)))
def test_permuted_c5_is_a_five_cycle(images):
    import networkx as nx
    g = apply_permutation(C5, Permutation(tuple(images)))
    assert len(g) == 5
    assert nx.is_isomorphic(nx.Graph(list(g)), nx.cycle_graph(5))
