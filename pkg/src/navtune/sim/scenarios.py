"""Scenario library: JSON-described worlds with scripted pedestrians.

Five built-in archetypes cover a narrow gate with a surprise obstacle, an
S-corridor, crossing agents, an open static room, and a dense crossing
crowd.  Jitter hooks vary pedestrian timing and endpoints for dataset
diversity while keeping every trial reproducible from its seed.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

import numpy as np

from ..errors import ConfigError
from .world import (
    Costmap,
    OccupancyGrid,
    Pedestrian,
    PedScript,
    RobotState,
    WorldState,
    inflate,
)

BUILTIN = ("gate", "corridor", "crossing", "open_room", "crowd")


@dataclass(frozen=True)
class PedestrianSpec:
    points: tuple[tuple[float, float], ...]
    speed: float
    radius: float = 0.25
    mode: str = "pingpong"
    phase: float = 0.0

    def to_script(self) -> PedScript:
        return PedScript(self.points, self.speed, self.mode, self.phase)


@dataclass(frozen=True)
class Scenario:
    name: str
    resolution: float
    map_rows: tuple[str, ...]
    start: tuple[float, float, float]
    goal: tuple[float, float, float]
    goal_tolerance: float = 0.5
    waypoints: tuple[tuple[float, float], ...] = ()
    pedestrians: tuple[PedestrianSpec, ...] = ()
    footprint_radius: float = 0.3
    max_time: float = 60.0
    jitter: dict | None = None

    def grid(self) -> OccupancyGrid:
        return OccupancyGrid.from_ascii(self.map_rows, self.resolution)


def _parse(cfg: dict, name: str) -> Scenario:
    try:
        peds = tuple(
            PedestrianSpec(
                points=tuple(tuple(p) for p in ped["points"]),
                speed=float(ped["speed"]),
                radius=float(ped.get("radius", 0.25)),
                mode=ped.get("mode", "pingpong"),
                phase=float(ped.get("phase", 0.0)),
            )
            for ped in cfg.get("pedestrians", [])
        )
        return Scenario(
            name=cfg.get("name", name),
            resolution=float(cfg["resolution"]),
            map_rows=tuple(cfg["map"]),
            start=tuple(cfg["start"]),
            goal=tuple(cfg["goal"]),
            goal_tolerance=float(cfg.get("goal_tolerance", 0.5)),
            waypoints=tuple(tuple(w) for w in cfg.get("waypoints", [])),
            pedestrians=peds,
            footprint_radius=float(cfg.get("footprint_radius", 0.3)),
            max_time=float(cfg.get("max_time", 60.0)),
            jitter=cfg.get("jitter"),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad scenario config {name!r}: {exc}") from exc


def load_scenario(name_or_path: str | Path) -> Scenario:
    """Load a built-in scenario by name, or any scenario JSON by path."""
    p = Path(name_or_path)
    if p.suffix == ".json" and p.exists():
        return _parse(json.loads(p.read_text()), p.stem)
    name = str(name_or_path)
    if name in BUILTIN:
        text = (
            resources.files("navtune.scenarios").joinpath(f"{name}.json").read_text()
        )
        return _parse(json.loads(text), name)
    raise ConfigError(f"unknown scenario {name_or_path!r} (built-ins: {BUILTIN})")


def jittered(scenario: Scenario, rng: np.random.Generator) -> Scenario:
    """Perturb pedestrian timing/speed and endpoints per the jitter config."""
    cfg = scenario.jitter or {}
    peds = []
    for ped in scenario.pedestrians:
        speed = ped.speed
        phase = ped.phase
        if cfg.get("speed"):
            speed = float(
                np.clip(speed * (1.0 + rng.uniform(-cfg["speed"], cfg["speed"])), 0.2, 2.0)
            )
        if cfg.get("phase"):
            route = PedScript(ped.points, speed, ped.mode, 0.0)
            total = 2.0 * sum(
                float(np.hypot(b[0] - a[0], b[1] - a[1]))
                for a, b in zip(ped.points, ped.points[1:])
            )
            phase = float(rng.uniform(0.0, max(total / speed, 1e-6)))
            del route
        peds.append(replace(ped, speed=speed, phase=phase))

    def nudge(pose, amount):
        if not amount:
            return pose
        dx, dy = rng.uniform(-amount, amount, size=2)
        return (pose[0] + dx, pose[1] + dy) + tuple(pose[2:])

    return replace(
        scenario,
        pedestrians=tuple(peds),
        start=nudge(scenario.start, cfg.get("start")),
        goal=nudge(scenario.goal, cfg.get("goal")),
    )


def build_world(
    scenario: Scenario,
    inflation_radius: float = 0.5,
    costmap: Costmap | None = None,
) -> WorldState:
    """Instantiate the world at t=0 for a scenario."""
    if costmap is None:
        costmap = inflate(scenario.grid(), inflation_radius)
    robot = RobotState(
        x=scenario.start[0],
        y=scenario.start[1],
        theta=scenario.start[2] if len(scenario.start) > 2 else 0.0,
        footprint_radius=scenario.footprint_radius,
    )
    peds = tuple(
        Pedestrian.from_script(spec.to_script(), spec.radius, 0.0)
        for spec in scenario.pedestrians
    )
    goal = scenario.goal if len(scenario.goal) > 2 else tuple(scenario.goal) + (0.0,)
    return WorldState(
        time=0.0, robot=robot, pedestrians=peds, costmap=costmap, goal=tuple(goal)
    )
