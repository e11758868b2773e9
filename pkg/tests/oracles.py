"""Independent reference computations used only by the tests.

These lean on sympy so they share no code with the package under test.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, List, Sequence, Set, Tuple

import sympy as sp

from regchains.poly import Polynomial, VariableOrder


def to_sympy(p: Polynomial):
    syms = {s: sp.Symbol(s) for s in p.order.symbols}
    expr = sp.Integer(0)
    for e, c in p.terms.items():
        term = sp.Rational(c.numerator, c.denominator)
        for s, k in zip(p.order.symbols, e):
            term *= syms[s] ** k
        expr += term
    return sp.expand(expr)


def from_sympy(expr, order: VariableOrder) -> Polynomial:
    syms = [sp.Symbol(s) for s in order.symbols]
    poly = sp.Poly(sp.expand(expr), *syms)
    terms = {}
    for monom, c in poly.terms():
        c = sp.Rational(c)
        terms[tuple(int(k) for k in monom)] = Fraction(int(c.p), int(c.q))
    return Polynomial(order, terms)


def sylvester_subresultant(a: Polynomial, b: Polynomial, v: str, j: int) -> Polynomial:
    """Determinantal j-th subresultant, rows of ``a`` first."""
    x = sp.Symbol(v)
    A, B = to_sympy(a), to_sympy(b)
    p, q = sp.degree(A, x), sp.degree(B, x)
    rows = [sp.Poly(A * x**i, x) for i in range(q - j - 1, -1, -1)]
    rows += [sp.Poly(B * x**i, x) for i in range(p - j - 1, -1, -1)]
    n = p + q - 2 * j
    ncols = p + q - j
    M = sp.zeros(n, n)
    for r, row in enumerate(rows):
        cs = list(reversed(row.all_coeffs()))
        cs += [0] * (ncols - len(cs))
        for c in range(n - 1):
            M[r, c] = cs[ncols - 1 - c]
        M[r, n - 1] = sum(cs[k] * x**k for k in range(j + 1))
    return from_sympy(M.det(), a.order)


def sylvester_resultant(a: Polynomial, b: Polynomial, v: str) -> Polynomial:
    return from_sympy(sp.resultant(to_sympy(a), to_sympy(b), sp.Symbol(v)), a.order)


def sympy_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    return from_sympy(sp.gcd(to_sympy(a), to_sympy(b)), a.order)


def solve_points(F: Sequence[Polynomial], order: VariableOrder) -> Set[Tuple[Fraction, ...]]:
    """All solutions of a zero-dimensional system with rational coordinates."""
    syms = [sp.Symbol(s) for s in order.symbols]
    sols = sp.solve([to_sympy(f) for f in F], syms, dict=True)
    out = set()
    for sol in sols:
        vals = []
        for s in syms:
            val = sp.nsimplify(sol[s])
            if not val.is_Rational:
                break
            vals.append(Fraction(int(val.p), int(val.q)))
        else:
            out.add(tuple(vals))
    return out


def box_points(F: Sequence[Polynomial], order: VariableOrder, values: Iterable[Fraction]) -> Set[Tuple[Fraction, ...]]:
    """Brute force: common zeros of ``F`` on a product box."""
    values = sorted(set(values))
    term_lists = [list(f.terms.items()) for f in F]
    found = set()
    for combo in itertools.product(values, repeat=len(order.symbols)):
        if all(_value(terms, combo) == 0 for terms in term_lists):
            found.add(combo)
    return found


def _value(terms, point) -> Fraction:
    total = Fraction(0)
    for e, c in terms:
        t = c
        for x, k in zip(point, e):
            if k:
                t *= x**k
        total += t
    return total


def small_rationals(bound: int = 10, dens: Sequence[int] = (1, 2, 4)) -> List[Fraction]:
    return sorted({Fraction(n, d) for d in dens for n in range(-bound * d, bound * d + 1)})
