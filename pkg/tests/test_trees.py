from __future__ import annotations

import pickle

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ielie.trees import (
    TreeParseError,
    alpha,
    beta,
    cuts,
    enumerate_trees,
    graft,
    graft_all,
    graft_multi,
    ladder,
    m_stat,
    parse,
    stats,
    sym_count,
    trees_up_to,
)
from oracles import (
    brute_alpha,
    brute_automorphisms,
    brute_beta,
    brute_cuts,
    brute_grafts,
    rooted_tree_counts,
)

T = parse


@st.composite
def tree_codes(draw, max_leaves=4, depth=3):
    if depth == 0:
        return "()"
    kids = draw(st.lists(tree_codes(max_leaves=max_leaves, depth=depth - 1), max_size=max_leaves))
    return "(" + "".join(kids) + ")"


# -- parsing ------------------------------------------------------------------


def test_parse_examples():
    assert T("()").size == 1
    assert T("(()())").canon == "(()())"
    assert T("(()(()))").canon == "((())())"
    assert T(b"(())").canon == "(())"


@pytest.mark.parametrize(
    "text, offset",
    [("", 0), (")", 0), ("((", 2), ("()()", 2), ("(x)", 1), ("(()", 3), ("())", 2)],
)
def test_parse_errors_carry_offset(text, offset):
    with pytest.raises(TreeParseError) as info:
        T(text)
    assert info.value.offset == offset


@given(tree_codes())
def test_canonical_form_is_stable(code):
    t = T(code)
    assert T(t.canon) is t
    assert t.size == code.count("(")
    assert pickle.loads(pickle.dumps(t)) is t


# -- enumeration ----------------------------------------------------------------


def test_counting_recurrence_oracle():
    assert rooted_tree_counts(10) == [1, 1, 2, 4, 9, 20, 48, 115, 286, 719]


def test_enumeration_matches_oracle():
    expected = rooted_tree_counts(10)
    for n in range(1, 11):
        trees = enumerate_trees(n)
        assert len(trees) == expected[n - 1]
        assert len({t.canon for t in trees}) == len(trees)
        assert all(t.size == n and T(t.canon) is t for t in trees)
        assert [t.canon for t in trees] == sorted(t.canon for t in trees)


def test_enumeration_small():
    assert [t.canon for t in enumerate_trees(1)] == ["()"]
    assert len(enumerate_trees(4)) == 4
    assert len(enumerate_trees(7)) == 48
    assert len(trees_up_to(6)) == 37
    with pytest.raises(ValueError):
        enumerate_trees(0)


# -- statistics -------------------------------------------------------------------


def test_stats_examples():
    s = stats(T("()"))
    assert (s.size, s.depth, s.rdeg, s.compsize) == (1, 0, 0, 0)
    s = stats(T("((()()())())"))
    assert (s.size, s.depth, s.rdeg, s.compsize) == (6, 2, 2, 4)
    s = stats(T("((()()())(())())"))
    assert (s.rdeg, s.compsize) == (3, 4)


def test_ladder():
    assert ladder(1).canon == "()"
    assert ladder(3).canon == "((()))"
    with pytest.raises(ValueError):
        ladder(0)


# -- cuts and grafts ----------------------------------------------------------------


def _pairs(xs):
    return [(r.canon, p.canon) for r, p in xs]


def test_cut_examples():
    assert cuts(T("()")) == []
    assert _pairs(cuts(T("(())"))) == [("()", "()")]
    assert _pairs(cuts(T("(()())"))) == [("(())", "()"), ("(())", "()")]
    assert _pairs(cuts(T("((()))"))) == [("(())", "()"), ("()", "(())")]


def test_graft_examples():
    assert graft(T("()"), 0, T("(())")).canon == "((()))"
    assert graft(T("(())"), 0, T("()")).canon == "(()())"
    assert graft(T("(())"), 1, T("()")).canon == "((()))"
    with pytest.raises(ValueError):
        graft(T("(())"), 2, T("()"))


def test_graft_multi_examples():
    leaf = T("()")
    assert graft_multi(leaf, 0, leaf, 2).canon == "(()())"
    assert graft_multi(T("((()))"), 1, leaf, 0) is T("((()))")
    assert graft_multi(leaf, 0, T("(())"), 1).canon == "((()))"
    with pytest.raises(ValueError):
        graft_multi(leaf, 1, leaf, 1)


@pytest.mark.parametrize("t", trees_up_to(7), ids=lambda t: t.canon)
def test_cuts_match_parent_array_oracle(t):
    assert _pairs(cuts(t)) == brute_cuts(t.canon)


@given(tree_codes(max_leaves=3), tree_codes(max_leaves=2, depth=2))
@settings(max_examples=60)
def test_grafts_match_parent_array_oracle(s, t):
    got = [u.canon for u in graft_all(T(s), T(t))]
    # graft_all follows the canonical preorder, the oracle the input preorder
    assert sorted(got) == sorted(brute_grafts(s, t))


def test_cut_graft_duality():
    # every cut (R, P) of t regrafts to t somewhere
    for t in trees_up_to(7):
        for r, p in cuts(t):
            assert t in graft_all(r, p)


def test_alpha_beta_examples():
    assert alpha(T("()"), T("(())"), T("()")) == 1
    assert alpha(T("()"), T("(()())"), T("(())")) == 2
    assert alpha(T("(()())"), T("()"), T("()")) == 0
    assert beta(T("(()())"), T("()"), T("(())")) == 1
    assert beta(T("((()))"), T("(())"), T("()")) == 1
    assert beta(T("(()())"), T("(())"), T("()")) == 0


def test_alpha_beta_match_oracle():
    small = trees_up_to(3)
    for t in trees_up_to(6):
        for s in small:
            for r in trees_up_to(t.size - s.size) if t.size > s.size else []:
                assert alpha(s, t, r) == brute_alpha(s.canon, t.canon, r.canon)
                assert beta(t, s, r) == brute_beta(t.canon, s.canon, r.canon)


def test_m_stat_examples():
    assert m_stat(T("(()())"), T("()"), 0) == 2
    assert m_stat(T("((()))"), T("(())"), 0) == 1
    assert m_stat(T("()"), T("()"), 0) == 0
    with pytest.raises(ValueError):
        m_stat(T("()"), T("()"), 1)


# -- automorphisms ----------------------------------------------------------------


def test_sym_count_examples():
    assert sym_count(T("()")) == 1
    assert sym_count(T("(()())")) == 2
    assert sym_count(T("((()())()()())")) == 12


@pytest.mark.parametrize("t", trees_up_to(7), ids=lambda t: t.canon)
def test_sym_count_matches_permutation_oracle(t):
    assert sym_count(t) == brute_automorphisms(t.canon)
