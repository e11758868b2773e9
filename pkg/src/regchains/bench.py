"""Serial time and parallel speedup table over systems and configurations."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Dict, List, Sequence

from .concurrency import Parallel, SolveConfig, SolveMode, Strategy
from .harness import run_solve
from .sysfile import SystemFile


@dataclass
class BenchRow:
    system: str
    strategy: Strategy
    mode: SolveMode
    serial_ms: float
    coarse_ms: float
    fine_ms: float

    @staticmethod
    def _ratio(a: float, b: float) -> float:
        if b <= 0 or not math.isfinite(a):
            return 0.0
        return a / b

    @property
    def speedup_c(self) -> float:
        return self._ratio(self.serial_ms, self.coarse_ms)

    @property
    def speedup_cf(self) -> float:
        return self._ratio(self.serial_ms, self.fine_ms)

    def to_dict(self) -> Dict[str, object]:
        return {
            "system": self.system,
            "strategy": self.strategy.value,
            "mode": self.mode.value,
            "serialMs": round(self.serial_ms, 3),
            "speedupC": round(self.speedup_c, 3),
            "speedupCF": round(self.speedup_cf, 3),
        }


def run_benchmark(
    systems: Sequence[SystemFile], workers: int, repeats: int = 3, backend: str = "thread"
) -> List[BenchRow]:
    """Rows in input order; each time is the median of ``repeats`` solves."""
    rows = []
    for sysf in systems:
        for strategy in Strategy:
            for mode in SolveMode:
                times = {}
                for par in Parallel:
                    cfg = SolveConfig(strategy=strategy, mode=mode, parallel=par, workers=workers, backend=backend)
                    times[par] = run_solve(sysf, cfg, repeats=repeats).wall_time_ms
                rows.append(BenchRow(sysf.name, strategy, mode, times[Parallel.S], times[Parallel.C], times[Parallel.CF]))
    return rows


def format_table(rows: Sequence[BenchRow]) -> str:
    header = ("system", "strategy", "mode", "serial ms", "C speedup", "C+F speedup")
    body = [
        (r.system, r.strategy.value, r.mode.value, f"{r.serial_ms:.1f}", f"{r.speedup_c:.2f}", f"{r.speedup_cf:.2f}")
        for r in rows
    ]
    widths = [max(len(str(row[i])) for row in [header] + body) for i in range(len(header))]
    out = []
    for idx, row in enumerate([header] + body):
        cells = [str(c).ljust(w) if i < 3 else str(c).rjust(w) for i, (c, w) in enumerate(zip(row, widths))]
        out.append("  ".join(cells).rstrip())
        if idx == 0:
            out.append("  ".join("-" * w for w in widths))
    return "\n".join(out)


def to_json(rows: Sequence[BenchRow], workers: int, repeats: int) -> str:
    return json.dumps({"threads": workers, "repeats": repeats, "rows": [r.to_dict() for r in rows]}, indent=2)
