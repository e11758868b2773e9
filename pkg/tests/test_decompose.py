from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from oracles import box_points, solve_points
from conftest import CONFIGS, WORKERS, fixture, fixture_names, zero_dim_names
from regchains.chain import RegularChain, empty_chain, format_chain, reduce_by_chain, validate_chain
from regchains.concurrency import Runtime, SolveConfig, SolveMode, Strategy
from regchains.decompose import (
    choose_next_polynomial,
    is_not_included,
    merge_irredundant_lists,
    processing_order,
    remove_redundant_components,
    triangularize,
    triangularize_bubble,
    triangularize_level,
)
from regchains.harness import run_solve
from regchains.poly import VariableOrder, parse
from regchains.verify import enumerate_points, grid_solutions, point_tuple

ZYX = VariableOrder("z > y > x")
YX = VariableOrder("y > x")

EX1 = ["x^3 - 3*x^2 + 2*x", "2*y*x^2 - x^2 - 3*y*x + x", "z*x^2 - z*x"]
EX1_OUT = ["{x}", "{y; x - 1}", "{z; y - 1; x - 2}"]

# fixtures cheap enough to solve in all twelve configurations
CORPUS = [n for n in fixture_names() if n not in ("split8",)]


def P(text, order=ZYX):
    return parse(text, order)


def C(*members, order=YX):
    return RegularChain(order, [parse(m, order) for m in members])


def texts(chains):
    return [format_chain(T) for T in chains]


# -- selection order -----------------------------------------------------------


def test_choose_next_polynomial_ex1():
    F = [P(t) for t in EX1]
    assert choose_next_polynomial(F) == F[0]
    assert processing_order(F) == F


def test_choose_next_polynomial_trivial():
    p = P("x*y + 1")
    assert choose_next_polynomial([p]) == p
    assert choose_next_polynomial([p, P("x*y + 1")]) == p
    with pytest.raises(ValueError):
        choose_next_polynomial([])


def test_selection_prefers_degree_then_variable():
    F = [P("z"), P("y^2"), P("x")]
    assert [str(p) for p in processing_order(F)] == ["x", "z", "y^2"]


# -- solving -------------------------------------------------------------------


@pytest.mark.parametrize("cfg", CONFIGS, ids=lambda c: c.label())
def test_ex1_all_configs(cfg):
    result = triangularize([P(t) for t in EX1], cfg)
    assert texts(result.components) == EX1_OUT


@pytest.mark.parametrize("strategy", list(Strategy))
def test_empty_and_inconsistent_systems(strategy):
    cfg = SolveConfig(strategy=strategy)
    assert triangularize([], cfg, ZYX).components == [empty_chain(ZYX)]
    assert triangularize([P("1")], cfg).components == []
    assert triangularize([P("x"), P("x - 1")], cfg).components == []


@pytest.mark.parametrize("strategy", list(Strategy))
def test_kalkbrener_drops_degenerate_component(strategy):
    order = VariableOrder("x > b > a")
    F = [parse("a*x - b", order)]
    lw = triangularize(F, SolveConfig(strategy=strategy, mode=SolveMode.LAZARD_WU))
    kb = triangularize(F, SolveConfig(strategy=strategy, mode=SolveMode.KALKBRENER))
    assert texts(kb.components) == ["{x*a - b}"]
    assert sorted(texts(lw.components)) == sorted(["{x*a - b}", "{b; a}"])


@pytest.mark.parametrize("strategy", list(Strategy))
def test_redundant_component_removed(strategy):
    F = [P("y*x + y", YX), P("y", YX)]
    result = triangularize(F, SolveConfig(strategy=strategy))
    assert texts(result.components) == ["{y}"]
    sysf = fixture("redundant")
    raw = triangularize(sysf.polynomials, SolveConfig(strategy=strategy, remove_redundant=False))
    assert "{y; x + 1}" in texts(raw.components)
    pruned = triangularize(sysf.polynomials, SolveConfig(strategy=strategy))
    assert sorted(texts(pruned.components)) == ["{x + 1}", "{y}"]


def test_level_and_bubble_entry_points_agree():
    F = [P(t) for t in EX1]
    a = triangularize_level(F, SolveConfig())
    b = triangularize_bubble(F, SolveConfig(strategy=Strategy.BUBBLE))
    assert a.keys() == b.keys()


def test_mixed_orders_rejected():
    with pytest.raises(ValueError):
        triangularize([P("x"), P("x", YX)])


@pytest.mark.parametrize("name", CORPUS)
@pytest.mark.parametrize("cfg", CONFIGS, ids=lambda c: c.label())
def test_every_component_annihilates_input(name, cfg):
    sysf = fixture(name)
    result = triangularize(sysf.polynomials, cfg, sysf.order)
    for T in result.components:
        assert validate_chain(T) == []
        for f in sysf.polynomials:
            assert reduce_by_chain(f, T).is_zero()


@pytest.mark.parametrize("name", [n for n in fixture_names() if fixture(n).expected is not None])
def test_expected_components(name):
    sysf = fixture(name)
    result = triangularize(sysf.polynomials, SolveConfig(), sysf.order)
    assert sorted(result.keys()) == sorted(T.key() for T in sysf.expected)


def _points(chains):
    found = set()
    for T in chains:
        pts, complete = enumerate_points(T)
        assert complete
        found |= {point_tuple(T.order, pt) for pt in pts}
    return found


@pytest.mark.parametrize("name", zero_dim_names())
def test_zero_dim_points_identical_across_configs(name):
    sysf = fixture(name)
    seen = None
    for cfg in CONFIGS:
        pts = _points(triangularize(sysf.polynomials, cfg, sysf.order).components)
        seen = pts if seen is None else seen
        assert pts == seen, cfg.label()
    # the brute-force grid over the found coordinates reproduces the same set
    axes = {v: {p[i] for p in seen} for i, v in enumerate(sysf.order.symbols)}
    assert grid_solutions(sysf.polynomials, sysf.order, axes) == seen
    assert seen


# integers plus the quarter-grid near zero; every zero-dim fixture solution lies in it
BOX = [Fraction(n) for n in range(-9, 10)] + [Fraction(n, 4) for n in (-3, -2, -1, 1, 2, 3)]


@pytest.mark.parametrize("name", zero_dim_names())
def test_zero_dim_points_match_independent_oracles(name):
    sysf = fixture(name)
    found = _points(triangularize(sysf.polynomials, SolveConfig(), sysf.order).components)
    assert found == solve_points(sysf.polynomials, sysf.order)
    assert found == box_points(sysf.polynomials, sysf.order, BOX)


@pytest.mark.parametrize("name", CORPUS)
def test_kalkbrener_subset_of_lazard_wu(name):
    sysf = fixture(name)
    for strategy in Strategy:
        lw = triangularize(sysf.polynomials, SolveConfig(strategy=strategy, mode="lazard-wu"), sysf.order).components
        kb = triangularize(sysf.polynomials, SolveConfig(strategy=strategy, mode="kalkbrener"), sysf.order).components
        for T in kb:
            assert T in lw or any(not is_not_included(T, U) for U in lw), format_chain(T)


def test_level_serial_is_deterministic():
    sysf = fixture("ex2_n4")
    cfg = SolveConfig(workers=1)
    runs = {run_solve(sysf, cfg).to_json(include_time=False) for _ in range(3)}
    assert len(runs) == 1


# -- redundancy ----------------------------------------------------------------


def test_is_not_included_examples():
    T1 = C("x + 1", "y")
    T2 = C("y")
    assert is_not_included(T1, T2) is False
    assert is_not_included(T2, T1) is True
    assert is_not_included(T1, T1) is False
    with pytest.raises(ValueError):
        is_not_included(T1, RegularChain(ZYX, [P("x")]))


def test_is_not_included_initial_check():
    # {b; a} lies in the closure of W({a*x - b}) but not in W itself
    order = VariableOrder("x > b > a")
    generic = RegularChain(order, [parse("a*x - b", order)])
    degenerate = RegularChain(order, [parse("a", order), parse("b", order)])
    assert is_not_included(degenerate, generic)


@pytest.mark.parametrize("name", zero_dim_names())
def test_is_not_included_is_sound_on_zero_dim_components(name):
    sysf = fixture(name)
    chains = triangularize(sysf.polynomials, SolveConfig(remove_redundant=False), sysf.order).components
    for T1, T2 in itertools.product(chains, repeat=2):
        if is_not_included(T1, T2):
            assert not _points([T1]) <= _points([T2])


def test_merge_examples():
    a, b = C("x + 1", "y"), C("y")
    assert merge_irredundant_lists([a], [b]) == [b]
    assert merge_irredundant_lists([a], []) == [a]
    assert merge_irredundant_lists([], [a]) == [a]
    x, y = C("x"), C("y")
    assert merge_irredundant_lists([x], [y]) == [x, y]


def test_remove_redundant_examples():
    T = C("x + 1", "y")
    assert remove_redundant_components([T]) == [T]
    assert remove_redundant_components([]) == []
    assert remove_redundant_components([C("y"), T]) == [C("y")]
    assert sorted(texts(remove_redundant_components([T, C("x + 1"), C("y")]))) == ["{x + 1}", "{y}"]


def _raw_components(name):
    sysf = fixture(name)
    return triangularize(sysf.polynomials, SolveConfig(remove_redundant=False), sysf.order).components


@pytest.mark.parametrize("name", CORPUS)
def test_remove_redundant_idempotent_and_order_insensitive(name):
    raw = _raw_components(name) + [C("y")] * (name == "redundant")
    once = remove_redundant_components(raw)
    assert set(remove_redundant_components(once)) == set(once)
    assert set(once) <= set(raw)
    for T in raw:
        assert T in once or any(not is_not_included(T, U) for U in once)
    rng = random.Random(7)
    for _ in range(5):
        shuffled = list(raw)
        rng.shuffle(shuffled)
        assert set(remove_redundant_components(shuffled)) == set(once)


def test_remove_redundant_parallel_matches_serial():
    raw = _raw_components("ex2_n6") + _raw_components("ex1")
    serial = remove_redundant_components(raw)
    with Runtime(SolveConfig(parallel="cf", workers=WORKERS)) as rt:
        assert remove_redundant_components(raw, rt) == serial
