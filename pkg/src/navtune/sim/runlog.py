"""Per-tick run records at 10 Hz, with CSV round-trip.

Columns (fixed order): t, x, y, theta, v, omega, cmd_v, cmd_omega, ttc,
min_dist, collided.  ``ttc`` is in seconds with ``inf`` for no contact
within the horizon; ``min_dist`` is the global contact margin in meters.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..errors import ConfigError

TICK = 0.1
COLUMNS = (
    "t",
    "x",
    "y",
    "theta",
    "v",
    "omega",
    "cmd_v",
    "cmd_omega",
    "ttc",
    "min_dist",
    "collided",
)


@dataclass
class RunLog:
    rows: list[tuple] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def append(
        self,
        t: float,
        x: float,
        y: float,
        theta: float,
        v: float,
        omega: float,
        cmd_v: float,
        cmd_omega: float,
        ttc: float,
        min_dist: float,
        collided: bool,
    ) -> None:
        if self.rows and abs((t - self.rows[-1][0]) - TICK) > 1e-9:
            raise ConfigError("run log ticks must be spaced exactly 0.1 s")
        self.rows.append(
            (t, x, y, theta, v, omega, cmd_v, cmd_omega, ttc, min_dist, int(collided))
        )

    def __len__(self) -> int:
        return len(self.rows)

    def column(self, name: str) -> np.ndarray:
        i = COLUMNS.index(name)
        return np.array([r[i] for r in self.rows], dtype=float)

    @property
    def ttc(self) -> np.ndarray:
        return self.column("ttc")

    @property
    def speed(self) -> np.ndarray:
        return self.column("v")

    def save_csv(self, path: str | Path) -> None:
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", newline="") as f:
            w = csv.writer(f)
            w.writerow(COLUMNS)
            for row in self.rows:
                w.writerow([_fmt(v) for v in row])

    @classmethod
    def load_csv(cls, path: str | Path) -> "RunLog":
        log = cls()
        with Path(path).open() as f:
            r = csv.reader(f)
            header = next(r)
            if tuple(header) != COLUMNS:
                raise ConfigError(f"unexpected run log header in {path}")
            for row in r:
                vals = [float(v) for v in row]
                log.rows.append(tuple(vals[:-1]) + (int(vals[-1]),))
        return log


def _fmt(v) -> str:
    if isinstance(v, float):
        if math.isinf(v):
            return "inf"
        return repr(v)
    return str(v)
