from __future__ import annotations

from fractions import Fraction

import pytest

from ielie.algebra import Element, Plus, bracket
from ielie.generate import (
    Bracket,
    Generator,
    Prec,
    Sum,
    decompose,
    decompose_step,
    evaluate,
    from_json,
    generators_of,
    ladder_free_check,
    prec,
    to_json,
)
from ielie.trees import ladder, parse, trees_up_to

T = parse
E = Element.of


def test_prec_examples():
    assert prec(ladder(4), T("(()()())")) is Prec.LESS
    assert prec(T("(()()())"), ladder(4)) is Prec.GREATER
    assert prec(T("((()())())"), T("((())(()))")) is Prec.INCOMPARABLE
    assert prec(T("(()())"), T("(()())")) is Prec.EQUAL
    with pytest.raises(ValueError):
        prec(T("()"), T("(())"))


def test_decompose_step_examples():
    pair, corr = decompose_step(T("(()())"))
    assert (pair[0].canon, pair[1].canon) == ("()", "(())") and corr == []
    pair, corr = decompose_step(T("(()()())"))
    assert (pair[0].canon, pair[1].canon) == ("()", "(()())")
    assert {(u.canon, c) for c, u in corr} == {("((())())", 2), ("((()()))", -1)}
    with pytest.raises(ValueError):
        decompose_step(ladder(3))


def test_decompose_step_corrections_precede():
    for t in trees_up_to(7):
        if t.rdeg > 1:
            _, corr = decompose_step(t)
            for _, u in corr:
                assert prec(u, t) is Prec.LESS


def test_decompose_examples():
    assert decompose(T("((()))")) == Generator(Plus("((()))"))
    assert decompose(T("(()())")) == Bracket(Generator(Plus("()")), Generator(Plus("(())")))
    assert evaluate(decompose(T("(()()())"))) == E(Plus("(()()())"))


@pytest.mark.parametrize("t", trees_up_to(7), ids=lambda t: t.canon)
def test_decompose_evaluates_back(t):
    p = decompose(t)
    assert evaluate(p) == E(Plus(t))
    assert all(b.tree.rdeg <= 1 for b in generators_of(p))
    assert from_json(to_json(p)) == p


def test_evaluate_sum():
    assert evaluate(Sum(((Fraction(3), Generator(Plus("()"))),))) == E(Plus("()"), 3)


def test_non_minimality_identity():
    leaf, l2, cherry = Plus("()"), Plus("(())"), Plus("(()())")
    ta, tb, tc = Plus("((()()))"), Plus("((())())"), Plus("((()))")
    lhs = (
        bracket(leaf, ta) * -2
        + bracket(leaf, tb)
        - bracket(l2, tc)
        - bracket(l2, cherry)
    )
    assert lhs == Element(
        {Plus("(((()())))"): 3, Plus("(((())()))"): -6, Plus("((()()()))"): -2}
    )


@pytest.mark.parametrize("m", range(1, 8))
def test_ladder_free(m):
    report = ladder_free_check(m)
    assert report.passed
    if m == 2:
        assert report.cases == 1
