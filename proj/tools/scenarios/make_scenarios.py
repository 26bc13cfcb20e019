#!/usr/bin/env python3
# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates the bundled desk-scale scenarios into scenarios/.

Every scenario is deterministic given this file. Usage:
    python3 tools/scenarios/make_scenarios.py [output_dir]
"""

import json
import math
import random
import sys
from pathlib import Path

ALTITUDE = 5.0
TILT_DEG = 10.0
# Same field of view as a 2500 px focal length on a 4000 x 3000 sensor.
INTRINSICS = {"focal_px": 500.0, "width_px": 800, "height_px": 600}
ACTOR = {"radius": 0.35, "height": 1.8, "num_side_faces": 6}
TALL = 8.0


class Grid:
    def __init__(self, cols, rows):
        self.cols, self.rows = cols, rows
        self.h = [[0.0] * cols for _ in range(rows)]

    def box(self, x0, y0, x1, y1, height):
        """Fills cells x0..x1-1, y0..y1-1."""
        for y in range(max(y0, 0), min(y1, self.rows)):
            for x in range(max(x0, 0), min(x1, self.cols)):
                self.h[y][x] = height

    def free(self, x, y):
        return 0 <= x < self.cols and 0 <= y < self.rows and self.h[y][x] < ALTITUDE

    def flat(self):
        return [self.h[y][x] for y in range(self.rows) for x in range(self.cols)]


def walk(waypoints, speed, horizon):
    """Constant-speed walk along a polyline; stops at the last waypoint."""
    poses = []
    seg_lengths = [math.dist(a, b) for a, b in zip(waypoints, waypoints[1:])]
    for t in range(horizon + 1):
        s = speed * t
        for i, length in enumerate(seg_lengths):
            if s <= length or i == len(seg_lengths) - 1:
                a, b = waypoints[i], waypoints[i + 1]
                u = min(s / length, 1.0) if length > 0 else 0.0
                x = a[0] + u * (b[0] - a[0])
                y = a[1] + u * (b[1] - a[1])
                yaw = math.atan2(b[1] - a[1], b[0] - a[0])
                break
            s -= length
        poses.append({"x": round(x, 4), "y": round(y, 4), "z": 0.0,
                      "yaw": round(yaw, 4)})
    return poses


def start_sets(grid, count, robots, center, seed, num_headings=8,
               near=3.0, far=10.0):
    """`count` sets of distinct free cells between `near` and `far` metres
    from `center`."""
    rng = random.Random(seed)
    cells = [(x, y) for y in range(grid.rows) for x in range(grid.cols)
             if grid.free(x, y)
             and near <= math.dist((x + 0.5, y + 0.5), center) <= far]
    sets = []
    for _ in range(count):
        picked = rng.sample(cells, robots)
        sets.append([{"x": x, "y": y, "theta": rng.randrange(num_headings)}
                     for x, y in picked])
    return sets


def centroid(actors, t=0):
    return (sum(a[t]["x"] for a in actors) / len(actors),
            sum(a[t]["y"] for a in actors) / len(actors))


def scenario(grid, actors, sets, horizon, formation_radius,
             formation_robots=None, altitude=ALTITUDE):
    robots = {
        "starts": sets[0],
        "start_sets": sets[1:],
        "altitude": altitude,
        "camera_tilt_deg": TILT_DEG,
        "max_step": 1,
        "max_turn": 1,
        "num_headings": 8,
        "step_metric": "chebyshev",
        "intrinsics": INTRINSICS,
        "stationary_bonus": 0.01,
    }
    doc = {
        "height_map": {"cols": grid.cols, "rows": grid.rows, "cell_size": 1.0,
                       "heights": grid.flat()},
        "actors": [dict(id=i, **ACTOR, poses=p) for i, p in enumerate(actors)],
        "robots": robots,
        "horizon": horizon,
        "formation_radius": formation_radius,
    }
    if formation_robots:
        doc["formation_robots"] = formation_robots
    return doc


def split():
    """Two actors walk together, part around a block, and rejoin."""
    g = Grid(20, 18)
    g.box(8, 7, 11, 11, TALL)
    actors = [walk([(2.0, 9.5), (6.0, 9.5), (9.5, 13.0), (13.0, 9.5),
                    (17.0, 9.5)], SPEED, T),
              walk([(2.0, 8.5), (6.0, 8.5), (9.5, 5.0), (13.0, 8.5),
                    (17.0, 8.5)], SPEED, T)]
    return scenario(g, actors,
                    start_sets(g, 10, 4, centroid(actors), 11), T, RADIUS)


def large():
    """Three actors cross a field of short walls; nothing blocks flight."""
    g = Grid(24, 24)
    rng = random.Random(5)
    for _ in range(20):
        x, y = rng.randrange(2, 22), rng.randrange(2, 22)
        if rng.random() < 0.5:
            g.box(x, y, x + 3, y + 1, rng.uniform(1.0, 2.5))
        else:
            g.box(x, y, x + 1, y + 3, rng.uniform(1.0, 2.5))
    actors = [walk([(5.0, 6.0), (12.0, 9.0), (18.0, 9.0)], SPEED, T),
              walk([(4.5, 12.0), (12.0, 12.5), (18.5, 16.0)], SPEED, T),
              walk([(6.0, 18.0), (12.5, 15.5), (17.0, 6.0)], SPEED, T)]
    return scenario(g, actors,
                    start_sets(g, 10, 8, centroid(actors), 12, far=11.0), T,
                    RADIUS)


def merge():
    """Actors round the corner of an L-shaped street in opposite
    directions."""
    g = Grid(24, 24)
    g.box(0, 0, 24, 24, TALL)
    g.box(2, 14, 20, 14 + MERGE_STREET, 0.0)   # east-west arm
    g.box(20 - MERGE_STREET, 2, 20, 14 + MERGE_STREET, 0.0)  # north-south arm
    mid = 14 + MERGE_STREET / 2.0
    east = 20 - MERGE_STREET / 2.0
    actors = [walk([(6.0, mid - 0.6), (east - 0.6, mid - 0.6),
                    (east - 0.6, 4.0)], SPEED, T),
              walk([(east + 0.6, 6.0), (east + 0.6, mid + 0.6),
                    (4.0, mid + 0.6)], SPEED, T)]
    return scenario(g, actors,
                    start_sets(g, 10, 4, centroid(actors, T // 2), 13,
                               near=2.0, far=12.0), T, RADIUS)


def corridor():
    """A narrow corridor between tall walls."""
    g = Grid(28, 13)
    g.box(4, 0, 24, 5, TALL)
    g.box(4, 8, 24, 13, TALL)
    actors = [walk([(5.0, 6.0), (26.0, 6.0)], SPEED, T),
              walk([(6.5, 7.0), (27.5, 7.0)], SPEED, T)]
    return scenario(g, actors,
                    start_sets(g, 10, 4, centroid(actors), 14, near=2.0,
                               far=12.0), T, RADIUS)


def forest():
    """Dense tall trees, three actors on separate winding trails, two
    planning robots flying below the canopy."""
    g = Grid(24, 24)
    rng = random.Random(7)
    actors = [walk([(2.5, 4.5), (6.5, 6.5), (10.5, 3.5), (14.5, 5.5)],
                   SPEED, T),
              walk([(2.5, 11.5), (6.5, 13.5), (10.5, 10.5), (14.5, 12.5)],
                   SPEED, T),
              walk([(2.5, 18.5), (6.5, 20.5), (10.5, 17.5), (14.5, 19.5)],
                   SPEED, T)]
    clear = {(int(p["x"]), int(p["y"])) for poses in actors for p in poses}
    for y in range(24):
        for x in range(24):
            if (x, y) not in clear and rng.random() < FOREST_DENSITY:
                g.h[y][x] = TALL
    return scenario(g, actors,
                    start_sets(g, 10, 2, centroid(actors), 15), T, RADIUS,
                    formation_robots=3, altitude=FOREST_ALTITUDE)


def tiny():
    """Small enough for the exhaustive joint planner."""
    T = 2
    g = Grid(4, 4)
    g.box(3, 3, 4, 4, TALL)
    a = walk([(1.5, 3.0), (2.5, 1.5)], 0.6, T)
    doc = scenario(g, [a], [[{"x": 0, "y": 0, "theta": 1},
                             {"x": 3, "y": 0, "theta": 3}]], T, 3.0)
    doc["robots"]["num_headings"] = 4
    doc["robots"]["intrinsics"] = {"focal_px": 60.0, "width_px": 80,
                                   "height_px": 60}
    doc["robots"]["altitude"] = 3.0
    doc["robots"]["camera_tilt_deg"] = 20.0
    del doc["robots"]["start_sets"]
    return doc


T = 15
SPEED = 0.6
RADIUS = 6.0
MERGE_STREET = 4
FOREST_DENSITY = 0.25
# Below the canopy.
FOREST_ALTITUDE = 2.5

BUILDERS = {"split": split, "large": large, "merge": merge,
            "corridor": corridor, "forest": forest, "tiny": tiny}


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else
               Path(__file__).resolve().parents[2] / "scenarios")
    out.mkdir(parents=True, exist_ok=True)
    for name, build in BUILDERS.items():
        with open(out / f"{name}.json", "w") as f:
            json.dump(build(), f, indent=1)
            f.write("\n")


if __name__ == "__main__":
    main()
