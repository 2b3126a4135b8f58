"""Compound-matrix dominance, exterior and combinatorial shifting, and
simplicial homology for Turán-type extremal problems."""

from .core import (Cmp, Family, KSet, Permutation, Relation, TermOrder, all_ksets, apply_permutation,
                   b_family, c_family, complete_family, count_meeting_prefix, family_order_compare, graph,
                   h_value, is_shifted, kset, m_value, order_compare, partial_compare, star_family,
                   turan_edge_count, validate_term_order)
from .dominance import GenericSource, Outcome, Verdict, dominates, rank_r, weakly_isomorphic
from .homology import complex_of, homology_shift_check, reduced_betti, star_domination_predicates
from .shifting import comb_shift, comb_shift_step, comb_shift_turan, exterior_shift, exterior_shift_with

__all__ = [
    "Cmp", "Family", "KSet", "Permutation", "Relation", "TermOrder", "all_ksets", "apply_permutation",
    "b_family", "c_family", "complete_family", "count_meeting_prefix", "family_order_compare", "graph",
    "h_value", "is_shifted", "kset", "m_value", "order_compare", "partial_compare", "star_family",
    "turan_edge_count", "validate_term_order",
    "GenericSource", "Outcome", "Verdict", "dominates", "rank_r", "weakly_isomorphic",
    "complex_of", "homology_shift_check", "reduced_betti", "star_domination_predicates",
    "comb_shift", "comb_shift_step", "comb_shift_turan", "exterior_shift", "exterior_shift_with",
]
