"""Algebraic checks of a decomposition against its input system."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .chain import RegularChain, format_chain, reduce_by_chain, validate_chain
from .decompose import is_not_included
from .poly import Polynomial, VariableOrder, evaluate, format_poly, rational_roots

Point = Tuple[Fraction, ...]

CHECK_NAMES = ("validator", "prem", "irredundant", "oracle")


@dataclass
class Verdict:
    checks: Dict[str, Optional[bool]] = field(default_factory=dict)
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def as_json(self) -> Dict[str, object]:
        return {k: ("skipped" if v is None else v) for k, v in self.checks.items()}


def enumerate_points(T: RegularChain) -> Tuple[List[Dict[str, Fraction]], bool]:
    """Rational points of a zero-dimensional chain by back-substitution.

    Returns the points of ``W(T)`` with rational coordinates and whether
    they are all of them (every fibre had only rational roots).
    """
    if T.dimension != 0:
        raise ValueError("chain is not zero-dimensional")
    points: List[Dict[str, Fraction]] = [{}]
    complete = True
    for p in T.polys:
        v = p.main_variable()
        nxt = []
        for pt in points:
            if evaluate(p.initial(), pt).is_zero():
                continue
            u = evaluate(p, pt)
            roots = rational_roots(u, v)
            if len(roots) != u.degree(v):
                complete = False
            for r in roots:
                q = dict(pt)
                q[v] = r
                nxt.append(q)
        points = nxt
    return points, complete


def point_tuple(order: VariableOrder, pt: Dict[str, Fraction]) -> Point:
    return tuple(pt[v] for v in order.symbols)


def vanishes(F: Iterable[Polynomial], pt: Dict[str, Fraction]) -> bool:
    return all(evaluate(f, pt).is_zero() for f in F)


def grid_solutions(F: Sequence[Polynomial], order: VariableOrder, values: Dict[str, Sequence[Fraction]]) -> Set[Point]:
    """Points of the product grid where every polynomial of ``F`` vanishes."""
    axes = [sorted(set(values.get(v, ()))) for v in order.symbols]
    found = set()
    for combo in itertools.product(*axes):
        pt = dict(zip(order.symbols, combo))
        if vanishes(F, pt):
            found.add(tuple(combo))
    return found


def verify_decomposition(
    F: Sequence[Polynomial], order: VariableOrder, components: Sequence[RegularChain]
) -> Verdict:
    verdict = Verdict()
    fail = verdict.failures

    ok = True
    for T in components:
        for problem in validate_chain(T):
            ok = False
            fail.append(f"{format_chain(T)}: {problem}")
    verdict.checks["validator"] = ok

    ok = True
    for T in components:
        for f in F:
            if not reduce_by_chain(f, T).is_zero():
                ok = False
                fail.append(f"{format_poly(f)} does not reduce to zero by {format_chain(T)}")
    verdict.checks["prem"] = ok

    ok = True
    for i, T1 in enumerate(components):
        for j, T2 in enumerate(components):
            if i != j and not is_not_included(T1, T2):
                ok = False
                fail.append(f"{format_chain(T1)} may be included in {format_chain(T2)}")
    verdict.checks["irredundant"] = ok

    verdict.checks["oracle"] = _oracle_check(F, order, components, fail)
    return verdict


def _oracle_check(
    F: Sequence[Polynomial], order: VariableOrder, components: Sequence[RegularChain], fail: List[str]
) -> Optional[bool]:
    enumerated: Set[Point] = set()
    all_rational = bool(components)
    checked_any = False
    ok = True
    for T in components:
        if T.dimension != 0:
            all_rational = False
            continue
        points, complete = enumerate_points(T)
        all_rational = all_rational and complete
        checked_any = True
        for pt in points:
            if not vanishes(F, pt):
                ok = False
                fail.append(f"point {point_tuple(order, pt)} of {format_chain(T)} is not a solution")
            enumerated.add(point_tuple(order, pt))
    if not checked_any:
        return None
    if all_rational:
        values: Dict[str, List[Fraction]] = {v: [] for v in order.symbols}
        for pt in enumerated:
            for v, c in zip(order.symbols, pt):
                values[v].append(c)
        brute = grid_solutions(F, order, values)
        if brute != enumerated:
            ok = False
            fail.append(
                f"grid oracle mismatch: missing {sorted(brute - enumerated)}, extra {sorted(enumerated - brute)}"
            )
    return ok
