from __future__ import annotations

import pickle
from fractions import Fraction

import pytest

from oracles import sylvester_resultant
from regchains.chain import (
    ChainError,
    RegularChain,
    chain_extend,
    empty_chain,
    format_chain,
    is_regular_chain,
    iterated_resultant,
    normalize_member,
    reduce_by_chain,
    validate_chain,
)
from regchains.poly import VariableOrder, parse

ORDER = VariableOrder("z > y > x")


def P(text):
    return parse(text, ORDER)


def C(*members):
    return RegularChain(ORDER, [P(m) for m in members])


def test_empty_chain():
    T = empty_chain(ORDER)
    assert T.height == 0
    assert T.dimension == 3
    assert T.contains_point({"x": 0, "y": 0, "z": 0})


def test_height_and_dimension():
    assert C("x - 2", "y - 1", "z").height == 3
    T1 = C("x")
    assert T1.dimension == 2
    axb_order = VariableOrder("x > b > a")
    assert RegularChain(axb_order, [parse("a", axb_order), parse("b", axb_order)]).height == 2
    for T in (C(), C("x"), C("x", "y"), C("x - 2", "y - 1", "z")):
        assert T.dimension + T.height == len(ORDER)


def test_members_sorted_by_main_variable():
    T = RegularChain(ORDER, [P("z"), P("x - 1"), P("y")])
    assert [p.main_variable() for p in T] == ["x", "y", "z"]
    assert format_chain(T) == "{z; y; x - 1}"
    assert T.member("y") == P("y")
    assert T.below("y") == C("x - 1")
    assert T.above("x") == [P("y"), P("z")]


def test_rejects_duplicate_main_variables_and_constants():
    with pytest.raises(ChainError):
        C("x", "2*x + 1")
    with pytest.raises(ChainError):
        RegularChain(ORDER, [P("3")])


def test_chain_extend():
    assert chain_extend(C("x - 1"), P("y")) == C("x - 1", "y")
    assert chain_extend(empty_chain(ORDER), P("x")) == C("x")
    with pytest.raises(ChainError):
        chain_extend(C("x"), P("2*x + 1"))
    with pytest.raises(ChainError):
        chain_extend(C("x"), P("x^2"))  # reduces to zero


def test_reduce_by_chain_examples():
    f3 = P("z*x^2 - z*x")
    assert reduce_by_chain(f3, C("x")).is_zero()
    p = P("y*x + z - 7")
    assert reduce_by_chain(p, empty_chain(ORDER)) == p
    assert reduce_by_chain(P("x + 1"), RegularChain(ORDER, [P("y")])) == P("x + 1")


def test_reduce_by_chain_is_reduced():
    T = C("x^2 - 2", "y^2 - x", "x*z^2 - y")
    r = reduce_by_chain(P("z^5*y^3 + x^4*z + y^7"), T)
    for t in T:
        v = t.main_variable()
        assert r.degree(v) < t.degree(v)


def test_members_already_reduced():
    T = C("x^3 - 3*x^2 + 2*x", "(3*x - 4)*y - 2*x + 2")
    for i, t in enumerate(T.polys):
        assert reduce_by_chain(t, RegularChain(ORDER, T.polys[:i])) == t


def test_iterated_resultant_examples():
    assert iterated_resultant(P("x - 1"), C("x")) == sylvester_resultant(P("x - 1"), P("x"), "x")
    assert not iterated_resultant(P("x - 1"), C("x")).is_zero()
    assert iterated_resultant(P("x"), C("x")).is_zero()
    r = iterated_resultant(P("2*x - 3"), C("x^3 - 3*x^2 + 2*x"))
    assert r.is_constant() and not r.is_zero()


def test_validator_accepts_and_rejects():
    assert is_regular_chain(C("x^3 - 3*x^2 + 2*x", "(3*x - 4)*y - 2*x + 2"))
    # the initial x is a zero divisor modulo x*(x - 1)
    assert any("zero divisor" in m for m in validate_chain(C("x^2 - x", "x*y - 1")))
    # not squarefree
    assert any("squarefree" in m for m in validate_chain(C("x - 1", "y^2 - 2*y + 1")))
    # not reduced
    T = RegularChain(ORDER, [P("x - 1"), P("x*y - 1")])
    assert any("reduced" in m for m in validate_chain(T))


def test_contains_point_requires_nonzero_initials():
    T = C("x - 1", "x*y - 1")
    assert not T.contains_point({"x": Fraction(1), "y": Fraction(0), "z": Fraction(0)})
    assert T.contains_point({"x": Fraction(1), "y": Fraction(1), "z": Fraction(5)})
    S = RegularChain(ORDER, [P("x"), P("(x + 1)*y")])
    assert S.contains_point({"x": 0, "y": 0, "z": 0})


def test_normalize_member_removes_lower_content():
    assert normalize_member(P("(x^2 + 1)*(2*y - 4)")) == P("y - 2")
    assert normalize_member(P("-3*z*x + 6*x")) == P("z - 2")


def test_chain_pickles_and_hashes():
    T = C("x^2 - 2", "y - x")
    U = pickle.loads(pickle.dumps(T))
    assert U == T and hash(U) == hash(T) and U.key() == T.key()
