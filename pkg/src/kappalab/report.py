"""Check/report containers shared by all verification suites."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .semicat import Mor, Tol, DEFAULT_TOL, norm, residual

__all__ = ["Check", "Report", "Suite"]

TOOL_VERSION = "0.1.0"


@dataclass
class Check:
    check_id: str
    residual: float
    threshold: float
    passed: bool
    context: str = ""

    def to_dict(self) -> dict:
        return {
            "check": self.check_id,
            "residual": self.residual,
            "threshold": self.threshold,
            "pass": self.passed,
            "context": self.context,
        }


@dataclass
class Report:
    suite: str
    checks: list
    wall_time: float = 0.0
    seed: object = None

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, check_id: str) -> Check:
        for c in self.checks:
            if c.check_id == check_id:
                return c
        raise KeyError(check_id)

    def has_check(self, check_id: str) -> bool:
        return any(c.check_id == check_id for c in self.checks)

    def to_dict(self) -> dict:
        d = {
            "suite": self.suite,
            "overall": self.overall,
            "checks": [c.to_dict() for c in self.checks],
            "wall_time": self.wall_time,
            "version": TOOL_VERSION,
        }
        if self.seed is not None:
            d["seed"] = self.seed
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def format_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            ctx = f"  worst={c.context}" if c.context else ""
            lines.append(
                f"[{mark}] {c.check_id:<34} residual={c.residual:.3e} "
                f"(tol {c.threshold:.1e}){ctx}")
        lines.append(
            f"overall: {'PASS' if self.overall else 'FAIL'}"
            f"  ({len(self.checks)} checks, {self.wall_time:.3f}s)")
        return "\n".join(lines)


class Suite:
    """Accumulates named residual observations into a :class:`Report`.

    Each check keeps the worst residual over all observed tuples together
    with the context of the worst offender; a check passes iff every
    observation stayed within tolerance.
    """

    def __init__(self, name: str, tol: Tol = DEFAULT_TOL, seed=None):
        self.name = name
        self.tol = tol
        self.seed = seed
        self._t0 = time.perf_counter()
        self._order: list = []
        self._worst: dict = {}
        self._failed: dict = {}

    def observe(self, check_id: str, value: float, context: str = "",
                scale: float = 1.0) -> float:
        thr = self.tol.threshold(scale)
        if check_id not in self._worst:
            self._order.append(check_id)
            self._worst[check_id] = (value, thr, context)
            self._failed[check_id] = False
        elif value > self._worst[check_id][0]:
            self._worst[check_id] = (value, thr, context)
        if value > thr:
            self._failed[check_id] = True
        return value

    def observe_mors(self, check_id: str, f: Mor, g: Mor, context: str = "") -> float:
        return self.observe(check_id, residual(f, g), context,
                            scale=max(norm(f), norm(g)))

    def finish(self) -> Report:
        checks = [
            Check(cid, self._worst[cid][0], self._worst[cid][1],
                  not self._failed[cid], self._worst[cid][2])
            for cid in self._order
        ]
        return Report(self.name, checks,
                      wall_time=time.perf_counter() - self._t0, seed=self.seed)
