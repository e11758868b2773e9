"""Triangular sets and regular chains.

A :class:`RegularChain` is an immutable tuple of polynomials with pairwise
distinct main variables, stored in increasing main-variable order.  The
kernel only ever builds chains whose initials are regular modulo the lower
members; :func:`validate_chain` rechecks that property independently.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Tuple

from .poly import (
    Polynomial,
    VariableOrder,
    canonical,
    content,
    evaluate,
    exact_divide,
    format_poly,
    prem,
    resultant,
)


class ChainError(ValueError):
    """Raised when a polynomial cannot be added to a triangular set."""


class RegularChain:
    __slots__ = ("order", "polys", "_by_var", "_key")

    def __init__(self, order: VariableOrder, polys: Iterable[Polynomial] = ()):
        polys = tuple(polys)
        by_var: Dict[str, Polynomial] = {}
        for p in polys:
            if p.order != order:
                raise ChainError("member built over a different variable order")
            v = p.main_variable()
            if v is None:
                raise ChainError("a chain member cannot be constant")
            if v in by_var:
                raise ChainError(f"two members with main variable {v}")
            by_var[v] = p
        self.order = order
        self.polys = tuple(sorted(polys, key=lambda p: order.rank(p.main_variable())))
        self._by_var = by_var
        self._key: Optional[Tuple[str, ...]] = None

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.polys)

    @property
    def height(self) -> int:
        return len(self.polys)

    @property
    def dimension(self) -> int:
        return len(self.order) - len(self.polys)

    def main_variables(self) -> List[str]:
        return [p.main_variable() for p in self.polys]

    def is_algebraic(self, var: str) -> bool:
        return var in self._by_var

    def member(self, var: str) -> Optional[Polynomial]:
        return self._by_var.get(var)

    def below(self, var: str) -> "RegularChain":
        """Members whose main variable is strictly smaller than ``var``."""
        r = self.order.rank(var)
        return RegularChain(self.order, [p for p in self.polys if self.order.rank(p.main_variable()) < r])

    def at_most(self, var: str) -> "RegularChain":
        r = self.order.rank(var)
        return RegularChain(self.order, [p for p in self.polys if self.order.rank(p.main_variable()) <= r])

    def above(self, var: str) -> List[Polynomial]:
        """Members whose main variable is strictly greater than ``var``, increasing."""
        r = self.order.rank(var)
        return [p for p in self.polys if self.order.rank(p.main_variable()) > r]

    def initials(self) -> List[Polynomial]:
        return [p.initial() for p in self.polys]

    def with_member(self, p: Polynomial) -> "RegularChain":
        return RegularChain(self.order, self.polys + (p,))

    def key(self) -> Tuple[str, ...]:
        """Canonical text of the members, used for ordering and dedup."""
        if self._key is None:
            self._key = tuple(format_poly(p) for p in self.polys)
        return self._key

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RegularChain) and self.order == other.order and self.polys == other.polys

    def __hash__(self) -> int:
        return hash((self.order, self.polys))

    def __reduce__(self):
        return (RegularChain, (self.order, self.polys))

    def __repr__(self) -> str:
        return f"RegularChain({format_chain(self)})"

    def __str__(self) -> str:
        return format_chain(self)

    def contains_point(self, point: Mapping[str, Fraction]) -> bool:
        """True if ``point`` lies in the quasi-component of the chain.

        ``point`` must bind every variable of the order.
        """
        for p in self.polys:
            if not evaluate(p, point).is_zero():
                return False
            if evaluate(p.initial(), point).is_zero():
                return False
        return True


def empty_chain(order: VariableOrder) -> RegularChain:
    return RegularChain(order, ())


def format_chain(chain: RegularChain) -> str:
    if not chain.polys:
        return "{}"
    return "{" + "; ".join(format_poly(p) for p in reversed(chain.polys)) + "}"


def reduce_by_chain(p: Polynomial, chain: RegularChain) -> Polynomial:
    """Iterated pseudo-remainder of ``p`` by the chain, top member first."""
    r = p
    for t in reversed(chain.polys):
        if r.is_zero():
            break
        v = t.main_variable()
        if r.degree(v) >= t.degree(v):
            r = prem(r, t, v)
    return r


def iterated_resultant(p: Polynomial, chain: RegularChain) -> Polynomial:
    """``res(...res(p, T_top)..., T_bottom)``, skipping variables ``p`` lacks."""
    r = p
    for t in reversed(chain.polys):
        if r.is_zero() or r.is_constant():
            break
        v = t.main_variable()
        if r.degree(v) >= 1:
            r = resultant(r, t, v)
    return r


def normalize_member(p: Polynomial) -> Polynomial:
    """Remove the content in lower variables and take the integer-primitive form."""
    v = p.main_variable()
    if v is None:
        return canonical(p)
    c = content(p, v)
    if not c.is_constant():
        p = exact_divide(p, c)
    return canonical(p)


def chain_extend(chain: RegularChain, p: Polynomial) -> RegularChain:
    """Append ``p``, reduced by the chain, as a new top-or-middle member."""
    r = reduce_by_chain(p, chain)
    if r.is_zero() or r.is_constant():
        raise ChainError(f"{format_poly(p)} reduces to a constant modulo the chain")
    v = r.main_variable()
    if chain.is_algebraic(v):
        raise ChainError(f"main variable {v} is already algebraic")
    return chain.with_member(canonical(r))


def is_triangular_reduced(chain: RegularChain) -> bool:
    """Every member has degree below each lower member's main degree."""
    for i, p in enumerate(chain.polys):
        for t in chain.polys[:i]:
            v = t.main_variable()
            if p.degree(v) >= t.degree(v):
                return False
    return True


def validate_chain(chain: RegularChain) -> List[str]:
    """Independent check of the regular-chain invariants; returns problems found.

    Checked: distinct main variables, reduced members, initials regular
    modulo the lower members (nonzero iterated resultant), and each member
    squarefree modulo the lower members (nonzero iterated discriminant).
    """
    problems: List[str] = []
    if not is_triangular_reduced(chain):
        problems.append("members are not reduced with respect to lower members")
    for i, p in enumerate(chain.polys):
        lower = RegularChain(chain.order, chain.polys[:i])
        v = p.main_variable()
        init = p.initial()
        if iterated_resultant(init, lower).is_zero():
            problems.append(f"initial of {format_poly(p)} is a zero divisor")
        if p.degree(v) >= 2:
            disc = resultant(p, p.diff(v), v)
            if iterated_resultant(disc, lower).is_zero():
                problems.append(f"{format_poly(p)} is not squarefree modulo lower members")
    return problems


def is_regular_chain(chain: RegularChain) -> bool:
    return not validate_chain(chain)
