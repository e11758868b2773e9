"""Concurrency substrate: generator channels, a worker pool with inline
fallback, two-way fork-join and a grain-size-one parallel-for.

Every submission first tries to claim an idle pooled worker.  If none is
free the task runs inline on the caller, so recursive splitting can never
starve waiting on a queued task.  All messages exchanged between tasks are
immutable; the only shared mutable state is inside :class:`GeneratorChannel`
and the pool's bookkeeping, each guarded by its own lock.
"""

from __future__ import annotations

import enum
import os
import threading
from collections import deque
from concurrent.futures import Future, ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, Deque, Generic, Iterator, List, Optional, Sequence, Tuple, TypeVar

T = TypeVar("T")
R = TypeVar("R")

THREADS_ENV = "SOLVER_THREADS"


class Strategy(str, enum.Enum):
    LEVEL = "level"
    BUBBLE = "bubble"


class SolveMode(str, enum.Enum):
    LAZARD_WU = "lazard-wu"
    KALKBRENER = "kalkbrener"


class Parallel(str, enum.Enum):
    S = "s"
    C = "c"
    CF = "cf"


def default_workers() -> int:
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
        if n < 1:
            raise ValueError(f"{THREADS_ENV} must be at least 1")
        return n
    return os.cpu_count() or 1


@dataclass(frozen=True)
class SolveConfig:
    strategy: Strategy = Strategy.LEVEL
    mode: SolveMode = SolveMode.LAZARD_WU
    parallel: Parallel = Parallel.S
    workers: int = 0  # 0 means default_workers()
    backend: str = "thread"
    remove_redundant: bool = True

    def __post_init__(self):
        object.__setattr__(self, "strategy", Strategy(self.strategy))
        object.__setattr__(self, "mode", SolveMode(self.mode))
        object.__setattr__(self, "parallel", Parallel(self.parallel))
        if self.workers < 0:
            raise ValueError("workers must be non-negative")
        if self.backend not in ("thread", "process"):
            raise ValueError(f"unknown backend {self.backend!r}")

    @property
    def effective_workers(self) -> int:
        return self.workers or default_workers()

    @property
    def coarse(self) -> bool:
        return self.parallel in (Parallel.C, Parallel.CF)

    @property
    def fine(self) -> bool:
        return self.parallel is Parallel.CF

    def label(self) -> str:
        return f"{self.strategy.value}/{self.mode.value}/{self.parallel.value}"


def all_configs(workers: int = 0) -> List[SolveConfig]:
    """The twelve strategy x mode x parallel combinations."""
    return [
        SolveConfig(strategy=s, mode=m, parallel=p, workers=workers)
        for s in Strategy
        for m in SolveMode
        for p in Parallel
    ]


def _completed(fn: Callable[..., R], args: tuple) -> "Future[R]":
    fut: Future = Future()
    try:
        fut.set_result(fn(*args))
    except BaseException as exc:  # propagated through the handle
        fut.set_exception(exc)
    return fut


class WorkerPool:
    """Fixed set of worker threads; submissions beyond capacity run inline."""

    def __init__(self, capacity: int):
        if capacity < 0:
            raise ValueError("capacity must be non-negative")
        self.capacity = capacity
        self._slots = threading.BoundedSemaphore(capacity) if capacity else None
        self._executor = ThreadPoolExecutor(max_workers=capacity, thread_name_prefix="solver") if capacity else None
        self._lock = threading.Lock()
        self.pooled = 0
        self.inline = 0
        self._active = 0
        self.peak_active = 0

    def submit(self, fn: Callable[..., R], *args: Any) -> "Future[R]":
        """Run ``fn(*args)`` on an idle worker, or inline if none is idle."""
        if self._slots is not None and self._slots.acquire(blocking=False):
            with self._lock:
                self.pooled += 1
            try:
                return self._executor.submit(self._run_pooled, fn, args)
            except BaseException:
                self._slots.release()
                raise
        with self._lock:
            self.inline += 1
        return _completed(fn, args)

    def _run_pooled(self, fn: Callable[..., R], args: tuple) -> R:
        with self._lock:
            self._active += 1
            if self._active > self.peak_active:
                self.peak_active = self._active
        try:
            return fn(*args)
        finally:
            with self._lock:
                self._active -= 1
            self._slots.release()

    def shutdown(self) -> None:
        if self._executor is not None:
            self._executor.shutdown(wait=True)

    def __enter__(self) -> "WorkerPool":
        return self

    def __exit__(self, *exc) -> None:
        self.shutdown()


class ChannelClosedError(RuntimeError):
    pass


class _Exhausted:
    __slots__ = ()

    def __repr__(self) -> str:
        return "EXHAUSTED"

    def __bool__(self) -> bool:
        return False


EXHAUSTED = _Exhausted()


class GeneratorChannel(Generic[T]):
    """Unbounded FIFO between producers and a single consumer."""

    def __init__(self):
        self._queue: Deque[T] = deque()
        self._cond = threading.Condition()
        self._complete = False
        self._error: Optional[BaseException] = None
        self.generated = 0

    def generate_object(self, obj: T) -> None:
        with self._cond:
            if self._complete:
                raise ChannelClosedError("generate_object after set_complete")
            self._queue.append(obj)
            self.generated += 1
            self._cond.notify()

    def set_complete(self) -> None:
        with self._cond:
            self._complete = True
            self._cond.notify_all()

    def fail(self, exc: BaseException) -> None:
        with self._cond:
            if self._error is None:
                self._error = exc
            self._complete = True
            self._cond.notify_all()

    @property
    def complete(self) -> bool:
        with self._cond:
            return self._complete

    def get_next(self):
        """Next object, or :data:`EXHAUSTED` once complete and drained."""
        with self._cond:
            while not self._queue and not self._complete:
                self._cond.wait()
            if self._queue:
                return self._queue.popleft()
            if self._error is not None:
                raise self._error
            return EXHAUSTED

    def __iter__(self) -> Iterator[T]:
        while True:
            obj = self.get_next()
            if obj is EXHAUSTED:
                return
            yield obj


class Runtime:
    """Pool plus the configuration switches the solver consults."""

    def __init__(self, config: SolveConfig):
        self.config = config
        self.workers = config.effective_workers
        capacity = self.workers - 1 if config.coarse else 0
        self.pool = WorkerPool(capacity)
        self._process_pool: Optional[ProcessPoolExecutor] = None
        self._plock = threading.Lock()

    @property
    def coarse(self) -> bool:
        return self.config.coarse

    @property
    def fine(self) -> bool:
        return self.config.fine

    def process_pool(self) -> ProcessPoolExecutor:
        with self._plock:
            if self._process_pool is None:
                self._process_pool = ProcessPoolExecutor(max_workers=self.workers)
            return self._process_pool

    def close(self) -> None:
        self.pool.shutdown()
        if self._process_pool is not None:
            self._process_pool.shutdown(wait=True)

    def __enter__(self) -> "Runtime":
        return self

    def __exit__(self, *exc) -> None:
        self.close()


def serial_runtime() -> Runtime:
    return Runtime(SolveConfig(parallel=Parallel.S, workers=1))


def _drive(producer: Callable[[GeneratorChannel], None], ch: GeneratorChannel) -> None:
    try:
        producer(ch)
    except BaseException as exc:
        ch.fail(exc)
        return
    ch.set_complete()


def generator_create(
    producer: Callable[[GeneratorChannel], None],
    runtime: Runtime,
    spawn: Optional[bool] = None,
) -> GeneratorChannel:
    """Create a channel and start ``producer(channel)``.

    ``spawn`` defaults to the fine-grained switch.  Unspawned producers run
    to completion before this returns; spawned ones go to the pool, falling
    back to inline when no worker is idle.  Completion is signalled by the
    driver, so producers only call ``generate_object``.
    """
    ch: GeneratorChannel = GeneratorChannel()
    if spawn is None:
        spawn = runtime.fine
    if spawn:
        runtime.pool.submit(_drive, producer, ch)
    else:
        _drive(producer, ch)
    return ch


def _settle(futures: Sequence[Future]) -> List[Any]:
    results = []
    first: Optional[BaseException] = None
    for f in futures:
        try:
            results.append(f.result())
        except BaseException as exc:
            results.append(None)
            if first is None:
                first = exc
    if first is not None:
        raise first
    return results


def fork_join2(a: Callable[[], R], b: Callable[[], Any], runtime: Runtime) -> Tuple[R, Any]:
    """Run ``a`` and ``b`` (concurrently when coarse) and return both results."""
    if not runtime.coarse:
        ra, rb = _settle([_completed(a, ()), _completed(b, ())])
        return ra, rb
    fa = runtime.pool.submit(a)
    fb = _completed(b, ())
    ra, rb = _settle([fa, fb])
    return ra, rb


def parallel_for_grain_one(items: Sequence[T], body: Callable[[T], R], runtime: Runtime) -> List[R]:
    """Apply ``body`` to every item, one task each; results in item order.

    The last item runs on the caller.  The first failure is raised after
    every task has settled.
    """
    items = list(items)
    if not items:
        return []
    if not runtime.coarse or len(items) == 1:
        return _settle([_completed(body, (x,)) for x in items])
    futures = [runtime.pool.submit(body, x) for x in items[:-1]]
    futures.append(_completed(body, (items[-1],)))
    return _settle(futures)
