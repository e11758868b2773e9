"""Incremental triangular decomposition (Level and Bubble strategies) and
redundant-component removal.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .chain import RegularChain, empty_chain, iterated_resultant, reduce_by_chain
from .concurrency import (
    GeneratorChannel,
    Runtime,
    SolveConfig,
    SolveMode,
    Strategy,
    _completed,
    _settle,
    fork_join2,
    generator_create,
    parallel_for_grain_one,
    serial_runtime,
)
from .kernel import KernelContext, intersect, iter_intersect
from .poly import Polynomial, VariableOrder, format_poly


@dataclass(frozen=True)
class Task:
    """Equations still to intersect with a partial chain."""

    remaining: Tuple[Polynomial, ...]
    chain: RegularChain


@dataclass
class Decomposition:
    components: List[RegularChain]
    mode: SolveMode
    strategy: Strategy
    stats: Dict[str, int] = field(default_factory=dict)

    def keys(self) -> List[Tuple[str, ...]]:
        return [c.key() for c in self.components]

    def __len__(self) -> int:
        return len(self.components)


def _selection_key(p: Polynomial) -> Tuple[int, int, str]:
    v = p.main_variable()
    rank = -1 if v is None else p.order.rank(v)
    deg = p.total_degree()
    return (int(deg) if deg != -math.inf else -1, rank, format_poly(p))


def choose_next_polynomial(F: Sequence[Polynomial]) -> Polynomial:
    """Smallest by (total degree, main variable rank, canonical text)."""
    if not F:
        raise ValueError("cannot choose from an empty system")
    return min(F, key=_selection_key)


def processing_order(F: Sequence[Polynomial]) -> List[Polynomial]:
    """The global order in which both strategies consume ``F``."""
    return sorted(F, key=_selection_key)


def _component_key(T: RegularChain):
    return (T.height, T.key())


# -- redundancy --------------------------------------------------------------


def is_not_included(T1: RegularChain, T2: RegularChain) -> bool:
    """True only when ``W(T1)`` is certainly not contained in ``W(T2)``."""
    if T1.order != T2.order:
        raise ValueError("chains over different variable orders")
    if T1.dimension > T2.dimension:
        return True
    for p in T2.polys:
        if not reduce_by_chain(p, T1).is_zero():
            return True
    # an initial of T2 vanishing on a component of T1 excludes those points
    for h in T2.initials():
        if iterated_resultant(h, T1).is_zero():
            return True
    return False


def merge_irredundant_lists(
    L1: Sequence[RegularChain], L2: Sequence[RegularChain], runtime: Optional[Runtime] = None
) -> List[RegularChain]:
    runtime = runtime or serial_runtime()
    keep1 = parallel_for_grain_one(L1, lambda T: all(is_not_included(T, U) for U in L2), runtime)
    L1p = [T for T, k in zip(L1, keep1) if k]
    keep2 = parallel_for_grain_one(L2, lambda U: all(is_not_included(U, T) for T in L1p), runtime)
    L2p = [U for U, k in zip(L2, keep2) if k]
    return L1p + L2p


def remove_redundant_components(
    L: Sequence[RegularChain], runtime: Optional[Runtime] = None
) -> List[RegularChain]:
    """Divide-and-conquer removal of chains included in another one."""
    runtime = runtime or serial_runtime()
    L = list(L)
    if len(L) <= 1:
        return L
    k = (len(L) + 1) // 2
    a, b = fork_join2(
        lambda: remove_redundant_components(L[:k], runtime),
        lambda: remove_redundant_components(L[k:], runtime),
        runtime,
    )
    return merge_irredundant_lists(a, b, runtime)


# -- strategies --------------------------------------------------------------


def _prepare(F: Sequence[Polynomial], order: Optional[VariableOrder]) -> Tuple[VariableOrder, List[Polynomial]]:
    if order is None:
        if not F:
            raise ValueError("an empty system needs an explicit variable order")
        order = F[0].order
    for f in F:
        if f.order != order:
            raise ValueError("all polynomials must share one variable order")
    return order, processing_order(F)


def _height_bound(mode: SolveMode, F: Sequence[Polynomial]) -> Optional[int]:
    return len(F) if mode is SolveMode.KALKBRENER else None


def _intersect_job(args) -> List[RegularChain]:
    # module-level so the process backend can pickle it
    f, T, bound = args
    return list(iter_intersect(f, T, KernelContext(serial_runtime(), bound)))


def triangularize_level(
    F: Sequence[Polynomial],
    config: SolveConfig = SolveConfig(),
    order: Optional[VariableOrder] = None,
    runtime: Optional[Runtime] = None,
) -> Decomposition:
    """Intersect one equation at a time with every chain, pruning after each round."""
    order, polys = _prepare(F, order)
    own = runtime is None
    runtime = runtime or Runtime(config)
    ctx = KernelContext(runtime, _height_bound(config.mode, F))
    stats = {"intersections": 0, "levels": 0}
    try:
        chains = [empty_chain(order)]
        for f in polys:
            if not chains:
                break
            stats["levels"] += 1
            stats["intersections"] += len(chains)
            if config.backend == "process" and runtime.coarse and len(chains) > 1:
                jobs = [(f, T, ctx.height_bound) for T in chains]
                results = list(runtime.process_pool().map(_intersect_job, jobs))
            else:
                results = parallel_for_grain_one(chains, lambda T, f=f: intersect(f, T, ctx=ctx), runtime)
            chains = [C for part in results for C in part]
            if config.remove_redundant:
                chains = remove_redundant_components(chains, runtime)
        chains.sort(key=_component_key)
        return Decomposition(chains, config.mode, config.strategy, stats)
    finally:
        if own:
            runtime.close()


def triangularize_bubble(
    F: Sequence[Polynomial],
    config: SolveConfig = SolveConfig(strategy=Strategy.BUBBLE),
    order: Optional[VariableOrder] = None,
    runtime: Optional[Runtime] = None,
) -> Decomposition:
    """Stream chains upward through generator channels; prune once at the end."""
    order, polys = _prepare(F, order)
    own = runtime is None
    runtime = runtime or Runtime(config)
    ctx = KernelContext(runtime, _height_bound(config.mode, F))
    stats = {"intersections": 0}
    stats_lock = threading.Lock()

    def solve_prefix(k: int, out: GeneratorChannel) -> None:
        if k == 0:
            out.generate_object(empty_chain(order))
            return
        f = polys[k - 1]
        upstream = generator_create(lambda ch: solve_prefix(k - 1, ch), runtime, spawn=runtime.coarse)

        def task(T: RegularChain) -> None:
            intersect(f, T, out, ctx)

        futures = []
        for T in upstream:
            with stats_lock:
                stats["intersections"] += 1
            futures.append(runtime.pool.submit(task, T) if runtime.coarse else _completed(task, (T,)))
        _settle(futures)

    try:
        final = generator_create(lambda ch: solve_prefix(len(polys), ch), runtime, spawn=False)
        chains = sorted(final, key=_component_key)
        if config.remove_redundant:
            chains = remove_redundant_components(chains, runtime)
        chains.sort(key=_component_key)
        return Decomposition(chains, config.mode, config.strategy, stats)
    finally:
        if own:
            runtime.close()


def triangularize(
    F: Sequence[Polynomial],
    config: SolveConfig = SolveConfig(),
    order: Optional[VariableOrder] = None,
) -> Decomposition:
    if config.strategy is Strategy.BUBBLE:
        return triangularize_bubble(F, config, order)
    return triangularize_level(F, config, order)
