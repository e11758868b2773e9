"""Command line interface: ``regchains solve`` and ``regchains bench``."""

from __future__ import annotations

import os
import sys
from typing import List

import click

from .bench import format_table, run_benchmark, to_json
from .concurrency import SolveConfig, default_workers
from .harness import run_solve
from .sysfile import SystemFileError, load_system

EXIT_SOLVER = 1
EXIT_INPUT = 2
EXIT_VERIFY = 3


def _load(path: str):
    try:
        return load_system(path)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)
    except SystemFileError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)


def _workers(threads):
    if threads is not None:
        return threads
    try:
        return default_workers()
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_INPUT)


@click.group()
def main() -> None:
    """Triangular decomposition of polynomial systems by regular chains."""


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.option("--strategy", type=click.Choice(["level", "bubble"]), default="level", show_default=True)
@click.option("--mode", type=click.Choice(["lazard-wu", "kalkbrener"]), default="lazard-wu", show_default=True)
@click.option("--parallel", type=click.Choice(["s", "c", "cf"]), default="s", show_default=True)
@click.option("--threads", type=click.IntRange(min=1), default=None, help="Worker count (default: $SOLVER_THREADS or CPU count).")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--verify", is_flag=True, help="Run the algebraic checks on the result.")
@click.option("--repeats", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--backend", type=click.Choice(["thread", "process"]), default="thread", show_default=True)
@click.option("--no-rrc", is_flag=True, help="Debug: skip redundant-component removal.")
def solve(file, strategy, mode, parallel, threads, fmt, verify, repeats, backend, no_rrc) -> None:
    """Decompose the system in FILE."""
    sysf = _load(file)
    cfg = SolveConfig(
        strategy=strategy,
        mode=mode,
        parallel=parallel,
        workers=_workers(threads),
        backend=backend,
        remove_redundant=not no_rrc,
    )
    try:
        report = run_solve(sysf, cfg, verify=verify, repeats=repeats)
    except Exception as exc:  # any solver failure aborts without partial output
        click.echo(f"error: solver failed: {type(exc).__name__}: {exc}", err=True)
        sys.exit(EXIT_SOLVER)
    click.echo(report.to_json() if fmt == "json" else report.to_text())
    if verify and not report.verified:
        sys.exit(EXIT_VERIFY)


def _collect(paths: List[str]) -> List[str]:
    files = []
    for p in paths:
        if os.path.isdir(p):
            files.extend(os.path.join(p, f) for f in sorted(os.listdir(p)) if f.endswith(".sys"))
        else:
            files.append(p)
    return files


@main.command()
@click.argument("paths", nargs=-1, required=True, type=click.Path())
@click.option("--threads", type=click.IntRange(min=1), default=None)
@click.option("--repeats", type=click.IntRange(min=1), default=3, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--backend", type=click.Choice(["thread", "process"]), default="thread", show_default=True)
def bench(paths, threads, repeats, fmt, backend) -> None:
    """Time every strategy, mode and parallel configuration on PATHS."""
    systems = [_load(f) for f in _collect(list(paths))]
    workers = _workers(threads)
    try:
        rows = run_benchmark(systems, workers, repeats, backend)
    except Exception as exc:
        click.echo(f"error: solver failed: {type(exc).__name__}: {exc}", err=True)
        sys.exit(EXIT_SOLVER)
    click.echo(to_json(rows, workers, repeats) if fmt == "json" else format_table(rows))


if __name__ == "__main__":  # pragma: no cover
    main()
