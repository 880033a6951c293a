"""Regenerate the built-in scenario JSON files from rectangle primitives."""
import json
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "navtune" / "scenarios"
RES = 0.1


def canvas(w_m, h_m):
    w, h = round(w_m / RES), round(h_m / RES)
    grid = [[False] * w for _ in range(h)]  # row 0 = bottom
    return grid


def fill(grid, x0, y0, x1, y1, value=True):
    for iy in range(max(0, round(y0 / RES)), min(len(grid), round(y1 / RES))):
        for ix in range(max(0, round(x0 / RES)), min(len(grid[0]), round(x1 / RES))):
            grid[iy][ix] = value


def border(grid, t=0.2):
    w, h = len(grid[0]) * RES, len(grid) * RES
    fill(grid, 0, 0, w, t)
    fill(grid, 0, h - t, w, h)
    fill(grid, 0, 0, t, h)
    fill(grid, w - t, 0, w, h)


def rows(grid):
    return ["".join("#" if c else "." for c in row) for row in reversed(grid)]


def dump(name, grid, **cfg):
    cfg = {"name": name, "resolution": RES, "map": rows(grid), **cfg}
    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / f"{name}.json").write_text(json.dumps(cfg, indent=1) + "\n")
    print(f"wrote {name}: {len(grid[0])}x{len(grid)} cells")


# (a) narrow gate with an obstacle squeezing the approach
g = canvas(8, 6)
border(g)
fill(g, 3.9, 0, 4.1, 2.3)       # gate wall, lower part
fill(g, 3.9, 3.7, 4.1, 6.0)     # gate wall, upper part
fill(g, 3.0, 3.3, 3.6, 3.9)     # surprise block shading the gate approach
dump(
    "gate", g,
    start=[1.0, 3.0, 0.0], goal=[7.0, 3.0, 0.0], goal_tolerance=0.5,
    waypoints=[[3.2, 2.7], [4.4, 3.0]],
    pedestrians=[],
    max_time=60.0,
    jitter={"speed": 0.0, "phase": False, "start": 0.15, "goal": 0.15},
)

# (b) corridor with sharp turns (S-shape, 1.6 m wide legs)
g = canvas(8, 6.8)
fill(g, 0, 0, 8, 6.8)  # all occupied, carve the corridor
fill(g, 0.8, 0.8, 7.2, 2.4, False)   # bottom leg, rightward
fill(g, 5.6, 2.4, 7.2, 4.4, False)   # right riser
fill(g, 0.8, 4.4, 7.2, 6.0, False)   # top leg, leftward
dump(
    "corridor", g,
    start=[1.4, 1.6, 0.0], goal=[1.4, 5.2, 3.141592653589793], goal_tolerance=0.5,
    waypoints=[[6.3, 1.6], [6.3, 5.1]],
    pedestrians=[],
    max_time=80.0,
    jitter={"speed": 0.0, "phase": False, "start": 0.1, "goal": 0.1},
)

# (c) dynamic multi-agent crossing in an open room
g = canvas(8, 8)
border(g)
dump(
    "crossing", g,
    start=[1.0, 4.0, 0.0], goal=[7.0, 4.0, 0.0], goal_tolerance=0.5,
    waypoints=[],
    pedestrians=[
        {"points": [[3.5, 1.2], [3.5, 6.8]], "speed": 0.9, "mode": "pingpong",
         "phase": 0.0, "radius": 0.25},
        {"points": [[5.0, 6.8], [5.0, 1.2]], "speed": 0.7, "mode": "pingpong",
         "phase": 3.0, "radius": 0.25},
        {"points": [[6.5, 1.0], [2.0, 6.5]], "speed": 0.8, "mode": "pingpong",
         "phase": 6.0, "radius": 0.25},
    ],
    max_time=60.0,
    jitter={"speed": 0.25, "phase": True, "start": 0.15, "goal": 0.15},
)

# (d) static path efficiency: two blocks, otherwise open
g = canvas(8, 6)
border(g)
fill(g, 3.0, 0.8, 3.6, 2.4)
fill(g, 4.6, 3.8, 5.2, 5.2)
dump(
    "open_room", g,
    start=[1.0, 3.0, 0.0], goal=[7.0, 3.0, 0.0], goal_tolerance=0.5,
    waypoints=[],
    pedestrians=[],
    max_time=60.0,
    jitter={"speed": 0.0, "phase": False, "start": 0.2, "goal": 0.2},
)

# (e) high-density pedestrian avoidance
g = canvas(9, 7)
border(g)
dump(
    "crowd", g,
    start=[1.0, 3.5, 0.0], goal=[8.0, 3.5, 0.0], goal_tolerance=0.5,
    waypoints=[],
    pedestrians=[
        {"points": [[3.0, 1.2], [3.0, 5.8]], "speed": 0.8, "mode": "pingpong",
         "phase": 0.0, "radius": 0.25},
        {"points": [[4.2, 5.8], [4.2, 1.2]], "speed": 0.9, "mode": "pingpong",
         "phase": 2.0, "radius": 0.25},
        {"points": [[5.4, 1.2], [5.4, 5.8]], "speed": 0.7, "mode": "pingpong",
         "phase": 4.0, "radius": 0.25},
        {"points": [[6.6, 5.8], [6.6, 1.2]], "speed": 0.85, "mode": "pingpong",
         "phase": 1.0, "radius": 0.25},
        {"points": [[2.0, 2.0], [7.5, 2.0], [7.5, 5.0], [2.0, 5.0]], "speed": 0.75,
         "mode": "loop", "phase": 5.0, "radius": 0.25},
        {"points": [[7.0, 1.5], [2.5, 6.0]], "speed": 0.8, "mode": "pingpong",
         "phase": 7.0, "radius": 0.25},
    ],
    max_time=80.0,
    jitter={"speed": 0.25, "phase": True, "start": 0.1, "goal": 0.1},
)
