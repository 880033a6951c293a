"""Deterministic 2D world: differential-drive robot, scripted pedestrians,
inflated costmap, and time-to-collision instrumentation."""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np
from scipy import ndimage

from ..errors import ConfigError

TTC_HORIZON = 10.0
LOCAL_WINDOW = 4.0  # robot-centered square side, meters


def wrap_pi(theta: float) -> float:
    """Wrap an angle to (-pi, pi]."""
    out = math.remainder(theta, 2.0 * math.pi)
    if out <= -math.pi:
        out += 2.0 * math.pi
    return out


def arc_positions(
    x: float, y: float, theta: float, v: float, omega: float, t: np.ndarray
) -> np.ndarray:
    """Closed-form unicycle positions at times ``t`` under constant (v, w)."""
    t = np.asarray(t, dtype=float)
    if abs(omega) < 1e-12:
        px = x + v * np.cos(theta) * t
        py = y + v * np.sin(theta) * t
    else:
        r = v / omega
        px = x + r * (np.sin(theta + omega * t) - math.sin(theta))
        py = y + r * (math.cos(theta) - np.cos(theta + omega * t))
    return np.stack([px, py], axis=-1)


def integrate_unicycle(
    x: float, y: float, theta: float, v: float, omega: float, dt: float
) -> tuple[float, float, float]:
    """Advance a unicycle pose by exact arc integration."""
    p = arc_positions(x, y, theta, v, omega, np.array(dt))
    return float(p[0]), float(p[1]), wrap_pi(theta + omega * dt)


@dataclass(frozen=True)
class OccupancyGrid:
    """Boolean grid; row index 0 sits at the origin (bottom of the map)."""

    resolution: float
    width: int
    height: int
    occupancy: np.ndarray
    origin: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if self.resolution <= 0 or self.width <= 0 or self.height <= 0:
            raise ConfigError("grid dimensions and resolution must be positive")
        occ = np.asarray(self.occupancy, dtype=bool)
        if occ.shape != (self.height, self.width):
            raise ConfigError("occupancy shape must be (height, width)")
        occ = occ.copy()
        occ.setflags(write=False)
        object.__setattr__(self, "occupancy", occ)
        centers = np.argwhere(occ).astype(float)
        # (N, 2) cell-center coordinates in meters, (x, y) order
        xy = np.stack(
            [
                self.origin[0] + (centers[:, 1] + 0.5) * self.resolution,
                self.origin[1] + (centers[:, 0] + 0.5) * self.resolution,
            ],
            axis=1,
        )
        xy.setflags(write=False)
        object.__setattr__(self, "_occupied_xy", xy)

    @classmethod
    def from_ascii(
        cls, rows: Sequence[str], resolution: float, origin=(0.0, 0.0)
    ) -> "OccupancyGrid":
        """Build from ASCII art; '#' marks occupied, first row is the top."""
        width = max(len(r) for r in rows)
        occ = np.zeros((len(rows), width), dtype=bool)
        for r, line in enumerate(rows):
            for c, ch in enumerate(line):
                occ[len(rows) - 1 - r, c] = ch == "#"
        return cls(resolution, width, len(rows), occ, tuple(origin))

    @property
    def occupied_xy(self) -> np.ndarray:
        return self._occupied_xy

    def rect_distances(self, points: np.ndarray) -> np.ndarray:
        """Exact distance from each point to the nearest occupied cell square.

        Returns +inf where the grid holds no occupied cells.
        """
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        occ = self._occupied_xy
        if occ.shape[0] == 0:
            return np.full(pts.shape[0], np.inf)
        half = self.resolution / 2.0
        out = np.empty(pts.shape[0])
        # chunk to bound the (points x cells) temporary
        chunk = max(1, int(2_000_000 / max(occ.shape[0], 1)))
        for s in range(0, pts.shape[0], chunk):
            block = pts[s : s + chunk]
            dx = np.abs(block[:, None, 0] - occ[None, :, 0]) - half
            dy = np.abs(block[:, None, 1] - occ[None, :, 1]) - half
            np.clip(dx, 0.0, None, out=dx)
            np.clip(dy, 0.0, None, out=dy)
            out[s : s + chunk] = np.sqrt(dx * dx + dy * dy).min(axis=1)
        return out


@dataclass(frozen=True)
class Costmap:
    """Occupancy grid with a linear inflation layer.

    ``cost`` is 1 on occupied cells and decays linearly to 0 at
    ``inflation_radius`` from the nearest occupied cell center.
    ``center_distance`` holds that distance (meters) per cell.
    """

    base: OccupancyGrid
    inflation_radius: float
    cost: np.ndarray
    center_distance: np.ndarray

    def cell_of(self, points: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        pts = np.atleast_2d(np.asarray(points, dtype=float))
        g = self.base
        ix = np.floor((pts[:, 0] - g.origin[0]) / g.resolution).astype(int)
        iy = np.floor((pts[:, 1] - g.origin[1]) / g.resolution).astype(int)
        inside = (ix >= 0) & (ix < g.width) & (iy >= 0) & (iy < g.height)
        return ix, iy, inside

    def center_distance_at(self, points: np.ndarray) -> np.ndarray:
        """Distance field sampled at the containing cell; +inf outside."""
        ix, iy, inside = self.cell_of(points)
        out = np.full(ix.shape, np.inf)
        out[inside] = self.center_distance[iy[inside], ix[inside]]
        return out

    def cost_at(self, points: np.ndarray) -> np.ndarray:
        ix, iy, inside = self.cell_of(points)
        out = np.zeros(ix.shape)
        out[inside] = self.cost[iy[inside], ix[inside]]
        return out


def inflate(grid: OccupancyGrid, radius: float) -> Costmap:
    """Linear-decay inflation: cost = max(0, 1 - d / radius), 1 on occupied."""
    if radius < 0:
        raise ConfigError("inflation radius must be >= 0")
    if grid.occupancy.any():
        dist = ndimage.distance_transform_edt(~grid.occupancy) * grid.resolution
    else:
        dist = np.full(grid.occupancy.shape, np.inf)
    if radius == 0.0:
        cost = np.where(grid.occupancy, 1.0, 0.0)
    else:
        cost = np.maximum(0.0, 1.0 - dist / radius)
        cost[grid.occupancy] = 1.0
    cost.setflags(write=False)
    dist.setflags(write=False)
    return Costmap(grid, radius, cost, dist)


@dataclass(frozen=True)
class RobotState:
    x: float
    y: float
    theta: float
    v: float = 0.0
    omega: float = 0.0
    footprint_radius: float = 0.3

    def __post_init__(self):
        if self.footprint_radius <= 0:
            raise ConfigError("footprint radius must be > 0")
        object.__setattr__(self, "theta", wrap_pi(self.theta))

    @property
    def position(self) -> np.ndarray:
        return np.array([self.x, self.y])


MAX_PED_SPEED = 2.0


@dataclass(frozen=True)
class PedScript:
    """Piecewise-linear waypoint route traversed at fixed leg speeds."""

    points: tuple[tuple[float, float], ...]
    speed: float
    mode: str = "loop"  # loop | pingpong | once
    phase: float = 0.0  # seconds into the route at t=0

    def __post_init__(self):
        if not (0.0 < self.speed <= MAX_PED_SPEED):
            raise ConfigError(f"pedestrian speed must be in (0, {MAX_PED_SPEED}]")
        if self.mode not in ("loop", "pingpong", "once"):
            raise ConfigError(f"unknown script mode {self.mode!r}")
        if len(self.points) < 2:
            raise ConfigError("script needs at least 2 waypoints")

    def _route(self) -> np.ndarray:
        pts = np.asarray(self.points, dtype=float)
        if self.mode == "loop":
            return np.vstack([pts, pts[0]])
        if self.mode == "pingpong":
            return np.vstack([pts, pts[-2::-1]])
        return pts

    def state_at(self, t: float) -> tuple[np.ndarray, np.ndarray]:
        """Closed-form (position, velocity) at time ``t``; no integration drift."""
        route = self._route()
        seg = np.diff(route, axis=0)
        lengths = np.hypot(seg[:, 0], seg[:, 1])
        keep = lengths > 1e-12
        route = np.vstack([route[:-1][keep], route[-1]])
        seg = np.diff(route, axis=0)
        lengths = np.hypot(seg[:, 0], seg[:, 1])
        durations = lengths / self.speed
        total = durations.sum()
        s = t + self.phase
        if self.mode == "once":
            if s >= total:
                return route[-1].copy(), np.zeros(2)
            s = max(s, 0.0)
        else:
            s = s % total
        cum = np.concatenate([[0.0], np.cumsum(durations)])
        i = int(np.searchsorted(cum, s, side="right") - 1)
        i = min(i, len(durations) - 1)
        frac = (s - cum[i]) / durations[i]
        pos = route[i] + frac * seg[i]
        vel = seg[i] / durations[i]
        return pos, vel


@dataclass(frozen=True)
class Pedestrian:
    position: tuple[float, float]
    velocity: tuple[float, float]
    radius: float
    script: PedScript | None = None

    @classmethod
    def from_script(cls, script: PedScript, radius: float, t: float) -> "Pedestrian":
        pos, vel = script.state_at(t)
        return cls(tuple(pos), tuple(vel), radius, script)


@dataclass(frozen=True)
class WorldState:
    time: float
    robot: RobotState
    pedestrians: tuple[Pedestrian, ...]
    costmap: Costmap
    goal: tuple[float, float, float]
    collided: bool = False

    def ped_array(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(positions (P,2), velocities (P,2), radii (P,)) as arrays."""
        if not self.pedestrians:
            z = np.zeros((0, 2))
            return z, z.copy(), np.zeros(0)
        pos = np.array([p.position for p in self.pedestrians], dtype=float)
        vel = np.array([p.velocity for p in self.pedestrians], dtype=float)
        rad = np.array([p.radius for p in self.pedestrians], dtype=float)
        return pos, vel, rad


def min_contact_margin(world: WorldState) -> float:
    """Smallest clearance between the robot boundary and any obstacle.

    Negative or zero means contact.  Static cells enter with exact
    point-to-rectangle distance; pedestrians as discs.
    """
    r = world.robot
    p = np.array([[r.x, r.y]])
    best = world.costmap.base.rect_distances(p)[0] - r.footprint_radius
    pos, _, rad = world.ped_array()
    if pos.shape[0]:
        d = np.hypot(pos[:, 0] - r.x, pos[:, 1] - r.y) - rad - r.footprint_radius
        best = min(best, float(d.min()))
    return float(best)


def step(world: WorldState, cmd: tuple[float, float], dt: float) -> WorldState:
    """Advance the world by ``dt`` under velocity command ``cmd``."""
    if dt <= 0:
        raise ConfigError("dt must be > 0")
    v, omega = float(cmd[0]), float(cmd[1])
    r = world.robot
    x, y, theta = integrate_unicycle(r.x, r.y, r.theta, v, omega, dt)
    t_new = world.time + dt
    robot = replace(r, x=x, y=y, theta=theta, v=v, omega=omega)
    peds = tuple(
        Pedestrian.from_script(p.script, p.radius, t_new) if p.script else p
        for p in world.pedestrians
    )
    new = replace(world, time=t_new, robot=robot, pedestrians=peds)
    return replace(new, collided=min_contact_margin(new) <= 0.0)


def _local_static_cells(world: WorldState, window: float) -> np.ndarray:
    """Occupied cell centers inside the robot-centered square window."""
    occ = world.costmap.base.occupied_xy
    if occ.shape[0] == 0:
        return occ
    half = window / 2.0
    r = world.robot
    keep = (np.abs(occ[:, 0] - r.x) <= half) & (np.abs(occ[:, 1] - r.y) <= half)
    return occ[keep]


def ttc(
    world: WorldState,
    horizon: float = TTC_HORIZON,
    window: float = LOCAL_WINDOW,
) -> float:
    """Time to first contact under held (v, w) and constant-velocity obstacles.

    Static cells are considered inside the local window only; pedestrians
    always.  Uses conservative advancement (the contact margin is Lipschitz
    in time), refined by bisection; returns +inf when nothing is hit within
    the horizon.
    """
    r = world.robot
    cells = _local_static_cells(world, window)
    half = world.costmap.base.resolution / 2.0
    ped_pos, ped_vel, ped_rad = world.ped_array()
    if cells.shape[0] == 0 and ped_pos.shape[0] == 0:
        return math.inf

    def margin(t: float) -> float:
        p = arc_positions(r.x, r.y, r.theta, r.v, r.omega, np.array(t))
        best = math.inf
        if cells.shape[0]:
            dx = np.maximum(np.abs(p[0] - cells[:, 0]) - half, 0.0)
            dy = np.maximum(np.abs(p[1] - cells[:, 1]) - half, 0.0)
            best = float(np.sqrt(dx * dx + dy * dy).min()) - r.footprint_radius
        if ped_pos.shape[0]:
            q = ped_pos + ped_vel * t
            d = np.hypot(q[:, 0] - p[0], q[:, 1] - p[1]) - ped_rad - r.footprint_radius
            best = min(best, float(d.min()))
        return best

    speed_bound = abs(r.v)
    if ped_vel.shape[0]:
        speed_bound += float(np.hypot(ped_vel[:, 0], ped_vel[:, 1]).max())
    m = margin(0.0)
    if m <= 0.0:
        return 0.0
    if speed_bound < 1e-12:
        return math.inf
    t = 0.0
    min_step = 2e-3
    while t < horizon:
        stride = max(m / speed_bound, min_step)
        t2 = min(t + stride, horizon)
        m2 = margin(t2)
        if m2 <= 0.0:
            lo, hi = t, t2
            for _ in range(40):
                mid = 0.5 * (lo + hi)
                if margin(mid) <= 0.0:
                    hi = mid
                else:
                    lo = mid
            return hi
        t, m = t2, m2
    return math.inf
