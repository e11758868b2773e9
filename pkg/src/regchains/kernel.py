"""Splitting kernel: regularize, regular gcd and intersect over regular chains.

All three are built from lazy generators so the serial configuration
streams branches in a fixed, reproducible order.  In the fine-grained
configuration :func:`_fan_out` runs independent sub-branches as producers
on the worker pool and consumes their channels in the serial order, so the
emitted sequence does not depend on scheduling.

Zero tests rely on the standard fact that for a regular chain ``T`` a
polynomial lies in the saturated ideal of ``T`` exactly when its
pseudo-remainder by ``T`` is zero.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from .chain import (
    RegularChain,
    normalize_member,
    reduce_by_chain,
)
from .concurrency import GeneratorChannel, Runtime, generator_create, serial_runtime
from .poly import (
    Polynomial,
    canonical,
    exact_divide,
    extended_euclid,
    format_poly,
    pseudo_divide,
    rational_roots,
    subresultant_chain,
)


class Status(str, enum.Enum):
    ZERO = "zero"
    REGULAR = "regular"


@dataclass
class KernelContext:
    runtime: Runtime = field(default_factory=serial_runtime)
    height_bound: Optional[int] = None

    @property
    def fine(self) -> bool:
        return self.runtime.fine

    def allows(self, height: int) -> bool:
        return self.height_bound is None or height <= self.height_bound


def _fan_out(ctx: KernelContext, items: Iterable, body: Callable[..., Iterator]) -> Iterator:
    """``for it in items: yield from body(it)``, with bodies spawned in CF mode."""
    if not ctx.fine:
        for it in items:
            yield from body(it)
        return
    items = list(items)
    if len(items) == 1:
        yield from body(items[0])
        return
    channels = []
    for it in items:
        def producer(ch: GeneratorChannel, it=it) -> None:
            for obj in body(it):
                ch.generate_object(obj)

        channels.append(generator_create(producer, ctx.runtime, spawn=True))
    for ch in channels:
        yield from ch


def _is_univariate(p: Polynomial, v: str) -> bool:
    return all(w == v for w in p.variables())


def _rebuild(chain: RegularChain, members: Sequence[Polynomial]) -> RegularChain:
    """Append ``members`` (increasing main variable) re-reduced over ``chain``."""
    for m in members:
        r = reduce_by_chain(m, chain)
        chain = chain.with_member(normalize_member(r))
    return chain


# -- regularize --------------------------------------------------------------


def _regularize(ctx: KernelContext, h: Polynomial, T: RegularChain) -> Iterator[Tuple[RegularChain, Status]]:
    hr = reduce_by_chain(h, T)
    if hr.is_zero():
        yield T, Status.ZERO
        return
    if hr.is_constant():
        yield T, Status.REGULAR
        return
    v = hr.main_variable()
    if not T.is_algebraic(v):
        for D, st in _regularize(ctx, hr.initial(), T):
            if st is Status.ZERO:
                yield from _regularize(ctx, hr, D)
            else:
                yield D, Status.REGULAR
        return
    top = T.member(v)
    low = T.below(v)
    up = T.above(v)
    for D, st in _regularize(ctx, hr.initial(), low):
        if st is Status.ZERO:
            yield from _regularize(ctx, hr, _rebuild(D, [top] + up))
            continue
        top_d = normalize_member(reduce_by_chain(top, D)) if D is not low else top
        for g, D2 in _split_gcd(ctx, top_d, hr, v, D):
            if g.degree(v) < 1:
                yield _rebuild(D2, [top_d] + up), Status.REGULAR
                continue
            yield _rebuild(D2, [g] + up), Status.ZERO
            t2 = normalize_member(reduce_by_chain(top_d, D2))
            q, _, _ = pseudo_divide(t2, g, v)
            yield from _regularize(ctx, hr, _rebuild(D2, [q] + up))


def _split_gcd(
    ctx: KernelContext, top: Polynomial, h: Polynomial, v: str, D: RegularChain
) -> Iterator[Tuple[Polynomial, RegularChain]]:
    """Gcd of a chain member with ``h`` (regular initial, lower degree)."""
    if _is_univariate(top, v) and _is_univariate(h, v):
        _, _, g = extended_euclid(top, h, v)
        yield canonical(g), D
        return
    for raw, D2 in _regular_gcd(ctx, top, h, v, D):
        yield normalize_member(raw) if raw.degree(v) >= 1 else raw, D2


# -- regular gcd -------------------------------------------------------------


def _regular_gcd(
    ctx: KernelContext, p: Polynomial, q: Polynomial, v: str, T: RegularChain
) -> Iterator[Tuple[Polynomial, RegularChain]]:
    """Branches ``(g, D)`` where ``g`` is a gcd of ``p`` and ``q`` modulo ``D``.

    Requires ``deg_v(p) >= deg_v(q) >= 1`` and both leading coefficients in
    ``v`` regular modulo ``T``.  ``g`` is the first subresultant whose
    principal coefficient is regular, reduced by ``D`` but not normalized,
    so its initial is that principal coefficient.
    """
    S = subresultant_chain(p, q, v)
    yield from _walk_subresultants(ctx, S, 0, v, T)


def _walk_subresultants(
    ctx: KernelContext, S: List[Polynomial], j: int, v: str, T: RegularChain
) -> Iterator[Tuple[Polynomial, RegularChain]]:
    last = len(S) - 1
    if j == last:
        yield reduce_by_chain(S[j], T), T
        return
    s_j = S[j].coefficient(v, j)
    for D, st in _regularize(ctx, s_j, T):
        if st is Status.ZERO:
            yield from _walk_subresultants(ctx, S, j + 1, v, D)
        else:
            yield reduce_by_chain(S[j], D), D


def _regular_form(
    ctx: KernelContext, f: Polynomial, v: str, T: RegularChain
) -> Iterator[Tuple[Polynomial, RegularChain]]:
    """Strip leading coefficients in ``v`` that vanish modulo each branch."""
    if f.is_zero():
        yield f, T
        return
    for D, st in _regularize(ctx, f.leading_coefficient(v), T):
        if st is Status.ZERO:
            yield from _regular_form(ctx, f.tail(v), v, D)
        else:
            yield f, D


def _general_gcd(
    ctx: KernelContext, p: Polynomial, q: Polynomial, v: str, T: RegularChain
) -> Iterator[Tuple[Polynomial, RegularChain]]:
    one = Polynomial.constant(p.order, 1)
    for p1, D1 in _regular_form(ctx, p, v, T):
        for q1, D2 in _regular_form(ctx, q, v, D1):
            if p1.is_zero() or q1.is_zero():
                g = q1 if p1.is_zero() else p1
                if g.is_zero() or g.degree(v) < 1:
                    yield (g if g.is_zero() else one), D2
                else:
                    yield reduce_by_chain(g, D2), D2
                continue
            if p1.degree(v) < 1 or q1.degree(v) < 1:
                yield one, D2
                continue
            a, b = (p1, q1) if p1.degree(v) >= q1.degree(v) else (q1, p1)
            yield from _regular_gcd(ctx, a, b, v, D2)


# -- intersect ---------------------------------------------------------------


def _intersect(ctx: KernelContext, p: Polynomial, T: RegularChain) -> Iterator[RegularChain]:
    pr = reduce_by_chain(p, T)
    if pr.is_zero():
        if ctx.allows(T.height):
            yield T
        return
    if pr.is_constant():
        return
    v = pr.main_variable()
    up = T.above(v)
    if T.is_algebraic(v):
        sub = _intersect_algebraic(ctx, pr, T.at_most(v))
    else:
        sub = _intersect_free(ctx, pr, T.below(v))
    for C in sub:
        yield from _extend(ctx, C, up)


def _intersect_free(ctx: KernelContext, p: Polynomial, C: RegularChain) -> Iterator[RegularChain]:
    # main variable of p is free with respect to C
    init = p.initial()

    def branch(item: Tuple[RegularChain, Status]) -> Iterator[RegularChain]:
        D, st = item
        if st is Status.ZERO:
            yield from _intersect(ctx, p, D)
            return
        yield from _append_squarefree(ctx, p, D, intersecting=True)
        # the points where the initial vanishes
        if ctx.allows(D.height + 1):
            for E in _intersect(ctx, init, D):
                yield from _intersect(ctx, p, E)

    yield from _fan_out(ctx, _regularize(ctx, init, C), branch)


def _intersect_algebraic(ctx: KernelContext, p: Polynomial, T: RegularChain) -> Iterator[RegularChain]:
    # p is reduced, its main variable v is the top main variable of T
    v = p.main_variable()
    t = T.member(v)
    low = T.below(v)

    def gcd_branch(item: Tuple[Polynomial, RegularChain]) -> Iterator[RegularChain]:
        g, D = item
        if g.degree(v) >= 1:
            special = g.initial()
            if ctx.allows(D.height + 1):
                yield _rebuild(D, [g])
        else:
            special = g
        if ctx.allows(D.height + 2):
            for E in _intersect(ctx, special, D):
                for E2 in _extend(ctx, E, [t]):
                    yield from _intersect(ctx, p, E2)

    def init_branch(item: Tuple[RegularChain, Status]) -> Iterator[RegularChain]:
        D, st = item
        if st is Status.ZERO:
            yield from _intersect(ctx, p, _rebuild(D, [t]))
            return
        t_d = normalize_member(reduce_by_chain(t, D)) if D is not low else t
        p_d = reduce_by_chain(p, D)
        yield from _fan_out(ctx, _regular_gcd(ctx, t_d, p_d, v, D), gcd_branch)

    yield from _fan_out(ctx, _regularize(ctx, p.initial(), low), init_branch)


def _append_squarefree(
    ctx: KernelContext, p: Polynomial, D: RegularChain, intersecting: bool
) -> Iterator[RegularChain]:
    """Append the squarefree part of ``p`` (free main variable, regular initial).

    Where the gcd with the derivative has a vanishing initial some points
    are lost by the division; they are recovered by recursing on the chains
    where that initial vanishes.
    """
    if not ctx.allows(D.height + 1):
        return
    v = p.main_variable()
    p = normalize_member(reduce_by_chain(p, D))
    if p.degree(v) == 1:
        yield D.with_member(p)
        return
    for g, D2 in _regular_gcd(ctx, p, p.diff(v), v, D):
        p2 = normalize_member(reduce_by_chain(p, D2)) if D2 is not D else p
        if g.degree(v) < 1:
            yield D2.with_member(p2)
            continue
        q, _, _ = pseudo_divide(p2, g, v)
        yield D2.with_member(normalize_member(reduce_by_chain(q, D2)))
        if ctx.allows(D2.height + 1):
            for E in _intersect(ctx, g.initial(), D2):
                if intersecting:
                    yield from _intersect(ctx, p2, E)
                else:
                    yield from _add_regular(ctx, p2, E)


def _add_regular(ctx: KernelContext, u: Polynomial, C: RegularChain) -> Iterator[RegularChain]:
    """Extend ``C`` by ``u`` wherever the initial of ``u`` is regular."""
    for D, st in _regularize(ctx, u.initial(), C):
        if st is Status.ZERO:
            continue
        yield from _append_squarefree(ctx, reduce_by_chain(u, D), D, intersecting=False)


def _extend(ctx: KernelContext, C: RegularChain, members: Sequence[Polynomial]) -> Iterator[RegularChain]:
    if not members:
        yield C
        return
    for C2 in _add_regular(ctx, members[0], C):
        yield from _extend(ctx, C2, members[1:])


# -- rational splitting ------------------------------------------------------


def split_rational(T: RegularChain) -> List[RegularChain]:
    """Split members that are univariate over the rationals at their rational roots.

    Each rational root ``r`` of such a member gives a branch with the
    linear member ``v - r``; the cofactor without rational roots (if any)
    gives one more.  Higher members are re-reduced, which may make them
    univariate in turn, so splitting recurses.
    """
    for i, t in enumerate(T.polys):
        v = t.main_variable()
        if t.degree(v) < 2 or not _is_univariate(t, v):
            continue
        roots = rational_roots(t, v)
        if not roots:
            continue
        x = Polynomial.variable(T.order, v)
        pieces = [canonical(x - r) for r in roots]
        rest = t
        for f in pieces:
            rest = exact_divide(rest, f)
        if rest.degree(v) >= 1:
            pieces.append(canonical(rest))
        pieces.sort(key=format_poly)
        low = RegularChain(T.order, T.polys[:i])
        up = list(T.polys[i + 1:])
        out: List[RegularChain] = []
        for f in pieces:
            out.extend(split_rational(_rebuild(low.with_member(f), up)))
        return out
    return [T]


# -- public streaming API ----------------------------------------------------


def _context(ctx: Optional[KernelContext]) -> KernelContext:
    return ctx if ctx is not None else KernelContext()


def iter_intersect(p: Polynomial, T: RegularChain, ctx: Optional[KernelContext] = None) -> Iterator[RegularChain]:
    ctx = _context(ctx)
    for C in _intersect(ctx, p, T):
        for E in split_rational(C):
            if ctx.allows(E.height):
                yield E


def intersect(
    p: Polynomial,
    T: RegularChain,
    out: Optional[GeneratorChannel] = None,
    ctx: Optional[KernelContext] = None,
) -> Optional[List[RegularChain]]:
    """Regular chains whose quasi-components cover ``W(T) ∩ V(p)``.

    With ``out`` the chains are streamed into the channel (the caller
    signals completion); otherwise a list is returned.
    """
    if out is None:
        return list(iter_intersect(p, T, ctx))
    for C in iter_intersect(p, T, ctx):
        out.generate_object(C)
    return None


def _branch_key(item: Tuple[RegularChain, Status]):
    T, st = item
    return (0 if st is Status.ZERO else 1, T.key())


def regularize(
    h: Polynomial,
    T: RegularChain,
    out: Optional[GeneratorChannel] = None,
    ctx: Optional[KernelContext] = None,
) -> Optional[List[Tuple[RegularChain, Status]]]:
    """Split ``T`` so that ``h`` is zero or regular modulo each branch.

    Branches come zero-first, then in ascending canonical order.
    """
    branches = sorted(_regularize(_context(ctx), h, T), key=_branch_key)
    if out is None:
        return branches
    for b in branches:
        out.generate_object(b)
    return None


def regular_gcd(
    p: Polynomial,
    q: Polynomial,
    v: str,
    T: RegularChain,
    out: Optional[GeneratorChannel] = None,
    ctx: Optional[KernelContext] = None,
) -> Optional[List[Tuple[Polynomial, RegularChain]]]:
    """Branches ``(g, D)`` on which ``g`` is a gcd of ``p`` and ``q`` modulo ``D``.

    ``v`` must not be algebraic in ``T``.  ``g`` is canonically normalized;
    a constant ``g`` means ``p`` and ``q`` are coprime on that branch.
    """
    if T.is_algebraic(v):
        raise ValueError(f"{v} is algebraic in the chain")
    if q.degree(v) < 1 and p.degree(v) < 1:
        raise ValueError(f"neither polynomial involves {v}")
    branches = []
    for g, D in _general_gcd(_context(ctx), p, q, v, T):
        if g.is_zero():
            branches.append((g, D))
        elif g.degree(v) < 1:
            branches.append((Polynomial.constant(p.order, 1), D))
        else:
            branches.append((normalize_member(g), D))
    if out is None:
        return branches
    for b in branches:
        out.generate_object(b)
    return None
