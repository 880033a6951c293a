from .runlog import COLUMNS, TICK, RunLog
from .scenarios import BUILTIN, PedestrianSpec, Scenario, build_world, jittered, load_scenario
from .world import (
    LOCAL_WINDOW,
    TTC_HORIZON,
    Costmap,
    OccupancyGrid,
    Pedestrian,
    PedScript,
    RobotState,
    WorldState,
    arc_positions,
    inflate,
    integrate_unicycle,
    min_contact_margin,
    step,
    ttc,
    wrap_pi,
)

__all__ = [
    "BUILTIN",
    "COLUMNS",
    "Costmap",
    "LOCAL_WINDOW",
    "OccupancyGrid",
    "PedScript",
    "Pedestrian",
    "PedestrianSpec",
    "RobotState",
    "RunLog",
    "Scenario",
    "TICK",
    "TTC_HORIZON",
    "WorldState",
    "arc_positions",
    "build_world",
    "inflate",
    "integrate_unicycle",
    "jittered",
    "load_scenario",
    "min_contact_margin",
    "step",
    "ttc",
    "wrap_pi",
]
