"""Timed solving of system files and report formatting."""

from __future__ import annotations

import json
import statistics
import time
from dataclasses import dataclass
from typing import Dict, List, Optional

from .chain import RegularChain, format_chain
from .concurrency import SolveConfig
from .decompose import Decomposition, triangularize
from .poly import format_poly, warm_up
from .sysfile import SystemFile
from .verify import Verdict, verify_decomposition


@dataclass
class SolveReport:
    system: str
    config: SolveConfig
    threads: int
    decomposition: Decomposition
    wall_times_ms: List[float]
    verdict: Optional[Verdict] = None

    @property
    def components(self) -> List[RegularChain]:
        return self.decomposition.components

    @property
    def wall_time_ms(self) -> float:
        return statistics.median(self.wall_times_ms)

    @property
    def verified(self) -> Optional[bool]:
        return None if self.verdict is None else self.verdict.ok

    def to_dict(self, include_time: bool = True) -> Dict[str, object]:
        d: Dict[str, object] = {
            "system": self.system,
            "strategy": self.config.strategy.value,
            "mode": self.config.mode.value,
            "parallel": self.config.parallel.value,
            "threads": self.threads,
            "components": [[format_poly(p) for p in reversed(T.polys)] for T in self.components],
            "wallTimeMs": round(self.wall_time_ms, 3),
            "verified": self.verified,
            "checks": {} if self.verdict is None else self.verdict.as_json(),
        }
        if not include_time:
            del d["wallTimeMs"]
        return d

    def to_json(self, include_time: bool = True) -> str:
        return json.dumps(self.to_dict(include_time), indent=2)

    def to_text(self) -> str:
        lines = [
            f"system: {self.system}",
            f"config: {self.config.label()} threads={self.threads}",
            f"components: {len(self.components)}",
        ]
        lines += [f"  {format_chain(T)}" for T in self.components]
        lines.append(f"wall time: {self.wall_time_ms:.3f} ms")
        if self.verdict is not None:
            parts = ", ".join(f"{k} {'skipped' if v is None else ('ok' if v else 'FAILED')}" for k, v in self.verdict.checks.items())
            lines.append(f"verified: {'yes' if self.verdict.ok else 'no'} ({parts})")
            lines += [f"  failure: {msg}" for msg in self.verdict.failures]
        return "\n".join(lines)


def run_solve(sysf: SystemFile, config: SolveConfig, verify: bool = False, repeats: int = 1) -> SolveReport:
    """Solve ``repeats`` times, timing the solve only; keep the last result."""
    if repeats < 1:
        raise ValueError("repeats must be at least 1")
    warm_up(sysf.order)
    times = []
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = triangularize(sysf.polynomials, config, sysf.order)
        times.append((time.perf_counter() - t0) * 1000.0)
    verdict = verify_decomposition(sysf.polynomials, sysf.order, result.components) if verify else None
    return SolveReport(sysf.name, config, config.effective_workers, result, times, verdict)
