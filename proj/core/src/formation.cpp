// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Formation baseline. Robots ignore the motion model and every collision
// constraint; they sit on a circle around their assigned actor.

#include <chrono>
#include <cmath>
#include <numbers>

#include "viewplan/coord.hpp"

namespace viewplan {

double formation_separation(int group_size) {
  if (group_size == 2) return std::numbers::pi / 2.0;
  return 2.0 * std::numbers::pi / std::max(group_size, 1);
}

CameraPose formation_pose(const ActorPose& actor, const ActorModel& model,
                          double radius, double altitude, double base_angle,
                          int slot, int group_size) {
  const double angle = base_angle + slot * formation_separation(group_size);
  CameraPose pose;
  pose.position = {actor.position.x() + radius * std::cos(angle),
                   actor.position.y() + radius * std::sin(angle), altitude};
  pose.yaw = std::atan2(actor.position.y() - pose.position.y(),
                        actor.position.x() - pose.position.x());
  const double target_z = actor.position.z() + 0.5 * model.height;
  pose.pitch = std::atan2(target_z - altitude, radius);
  return pose;
}

std::vector<int> formation_groups(int num_robots, int num_actors) {
  std::vector<int> group(num_robots);
  for (int r = 0; r < num_robots; ++r) group[r] = r % num_actors;
  return group;
}

PlanResult formation_plan(const Scenario& scenario, ViewEvaluator& evaluator,
                          int num_robots, int orientations) {
  const auto started = std::chrono::steady_clock::now();
  const int num_actors = static_cast<int>(scenario.actors.size());
  if (num_actors == 0) {
    throw PlanningError("formation planner needs at least one actor");
  }
  const int n = num_robots > 0 ? num_robots : scenario.formation_robot_count();
  if (n < num_actors) {
    throw PlanningError("formation planner needs at least one robot per actor");
  }
  if (orientations < 1) {
    throw std::invalid_argument("formation needs at least one orientation");
  }

  const std::vector<int> group = formation_groups(n, num_actors);
  std::vector<std::vector<int>> members(num_actors);
  for (int r = 0; r < n; ++r) members[group[r]].push_back(r);

  const int faces = evaluator.layout().num_faces();
  const double altitude = scenario.robot_config.altitude;
  const double radius = scenario.formation_radius;

  PlanResult result;
  result.planner = "formation";
  result.poses.assign(n, std::vector<CameraPose>(scenario.horizon + 1));

  DensityField field(scenario.horizon, faces);
  for (int t = 0; t <= scenario.horizon; ++t) {
    std::vector<double> placed(faces, 0.0);
    for (int a = 0; a < num_actors; ++a) {
      const ActorTrack& actor = scenario.actors[a];
      const int size = static_cast<int>(members[a].size());

      double best_value = -1.0;
      std::vector<CameraPose> best_poses;
      std::vector<double> best_sum;
      for (int k = 0; k < orientations; ++k) {
        const double base = 2.0 * std::numbers::pi * k / orientations;
        std::vector<CameraPose> poses;
        std::vector<double> sum = placed;
        for (int slot = 0; slot < size; ++slot) {
          poses.push_back(formation_pose(actor.poses[t], actor.model, radius,
                                         altitude, base, slot, size));
          for (const FaceDensity& d : evaluator.evaluate(poses.back(), t)) {
            sum[d.face] += d.density;
          }
        }
        double value = 0.0;
        for (double v : sum) value += std::sqrt(v);
        if (value > best_value) {
          best_value = value;
          best_poses = std::move(poses);
          best_sum = std::move(sum);
        }
      }
      placed = std::move(best_sum);
      for (int slot = 0; slot < size; ++slot) {
        result.poses[members[a][slot]][t] = best_poses[slot];
      }
    }
    SparseDensities row;
    for (int f = 0; f < faces; ++f) {
      if (placed[f] > 0.0) row.push_back({f, placed[f]});
    }
    field.add(t, row);
  }

  result.reward.view_reward = total_view_reward(field);
  result.reward.per_robot_view_reward = result.reward.view_reward / n;

  // Off-grid robots collide when their positions fall in the same cell.
  const HeightMap& map = scenario.height_map;
  std::vector<Trajectory> cells(n);
  for (int r = 0; r < n; ++r) {
    for (int t = 0; t <= scenario.horizon; ++t) {
      const Eigen::Vector3d& p = result.poses[r][t].position;
      const int cx = static_cast<int>(std::floor(p.x() / map.cell_size));
      const int cy = static_cast<int>(std::floor(p.y() / map.cell_size));
      // Outside the map every robot gets a private sentinel cell.
      if (map.contains(cx, cy)) {
        cells[r].push_back({cx, cy, 0, t});
      } else {
        cells[r].push_back({-1 - r, -1, 0, t});
      }
    }
  }
  result.collision_count = collision_report(cells).collision_count;

  const double elapsed = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - started)
                             .count();
  result.wall_time_s.assign(n, elapsed / n);
  return result;
}

}  // namespace viewplan
