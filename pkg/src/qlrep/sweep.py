"""Grid sweeps over (q, p) at a fixed transition probability P.

Every cell of the grid is classified; trigonometric cells emit Bloch
points, hyperbolic cells are counted as skipped and emit nothing.
"""

from __future__ import annotations

import csv
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import IO, NamedTuple

import numpy as np

from .bloch import to_bloch
from .interference import Branch, Classification, interference_profile
from .prob_model import DEFAULT_TOL, ContextData

CSV_FIELDS = ("q", "p", "P", "lambda1", "phi1", "x", "y", "z", "r", "g", "b", "branch")
DEFAULT_MARGIN = 0.01

_BRANCHES = {
    "plus": (Branch.PLUS,),
    "minus": (Branch.MINUS,),
    "both": (Branch.PLUS, Branch.MINUS),
}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    P: float
    q_steps: int = 101
    p_steps: int = 101
    sign: str = "plus"
    tol: float = DEFAULT_TOL
    margin: float = DEFAULT_MARGIN

    def __post_init__(self):
        sign = self.sign.value if isinstance(self.sign, Branch) else str(self.sign).lower()
        object.__setattr__(self, "sign", sign)
        if sign not in _BRANCHES:
            raise ConfigError(f"sign must be one of plus, minus, both; got {self.sign!r}")
        if not (math.isfinite(self.P) and 0.0 < self.P < 1.0):
            raise ConfigError(f"P must lie in (0, 1), got {self.P!r}")
        for name in ("q_steps", "p_steps"):
            v = getattr(self, name)
            if isinstance(v, bool) or int(v) != v or v < 1:
                raise ConfigError(f"{name} must be a positive integer, got {v!r}")
        if not 0.0 < self.margin < 0.5:
            raise ConfigError(f"margin must lie in (0, 0.5), got {self.margin!r}")
        if not self.tol >= 0.0:
            raise ConfigError(f"tol must be nonnegative, got {self.tol!r}")

    @property
    def branches(self) -> tuple[Branch, ...]:
        return _BRANCHES[self.sign]

    def q_grid(self) -> np.ndarray:
        return grid(self.margin, self.q_steps)

    def p_grid(self) -> np.ndarray:
        return grid(self.margin, self.p_steps)


class SweepRecord(NamedTuple):
    q: float
    p: float
    P: float
    lambda1: float
    phi1: float
    x: float
    y: float
    z: float
    r: float
    g: float
    b: float
    branch: str


@dataclass(frozen=True)
class SweepResult:
    config: SweepConfig
    points: tuple[SweepRecord, ...]
    skipped: int
    total: int

    def to_dict(self) -> dict:
        return {
            "config": asdict(self.config),
            "skipped": self.skipped,
            "total": self.total,
            "points": [r._asdict() for r in self.points],
        }


def grid(margin: float, steps: int) -> np.ndarray:
    """Closed uniform grid on ``[margin, 1 - margin]``."""
    return np.linspace(margin, 1.0 - margin, int(steps))


def _cell(q: float, p: float, cfg: SweepConfig) -> list[SweepRecord] | None:
    c = ContextData.from_qpP(q, p, cfg.P, tol=cfg.tol)
    out = []
    for branch in cfg.branches:
        profile = interference_profile(c, branch)
        if profile.classification is Classification.HYPERBOLIC:
            return None
        pt = to_bloch(c, branch)
        out.append(SweepRecord(q, p, cfg.P, profile.lambdas[0], profile.phases[0],
                               pt.x, pt.y, pt.z, *pt.color, branch.value))
    return out


def _row(args) -> tuple[list[SweepRecord], int]:
    q, cfg = args
    points, skipped = [], 0
    for p in cfg.p_grid():
        cell = _cell(float(q), float(p), cfg)
        if cell is None:
            skipped += 1
        else:
            points.extend(cell)
    return points, skipped


def run_sweep(cfg: SweepConfig, workers: int = 1) -> SweepResult:
    """Evaluate every grid cell; output order is (q index, p index, branch).

    ``workers > 1`` spreads q-rows over processes; the result is identical
    to the serial run.
    """
    jobs = [(float(q), cfg) for q in cfg.q_grid()]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_row, jobs))
    else:
        rows = [_row(job) for job in jobs]
    points = tuple(rec for row_points, _ in rows for rec in row_points)
    skipped = sum(s for _, s in rows)
    return SweepResult(cfg, points, skipped, cfg.q_steps * cfg.p_steps)


def rc_fraction(P: float, n: int, margin: float = DEFAULT_MARGIN) -> float:
    """Share of an ``n x n`` interior grid at transition probability ``P`` that is trigonometric."""
    result = run_sweep(SweepConfig(P=P, q_steps=n, p_steps=n, sign="plus", margin=margin))
    return (result.total - result.skipped) / result.total


def format_float(v: float) -> str:
    return format(v, ".17g")


def write_csv(result: SweepResult, fh: IO[str]) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for rec in result.points:
        writer.writerow([*(format_float(v) for v in rec[:-1]), rec.branch])


def write_json(result: SweepResult, fh: IO[str]) -> None:
    json.dump(result.to_dict(), fh, indent=1)
    fh.write("\n")
